import sys
from ffcgen import Cat

c = Cat("pretzel P(-2,2,2), sl3, q = -6", quantum=-6)
for i in range(1, 12):
    c.obj("gamma%d" % i, 2)
for i in range(1, 13):
    c.obj("beta%d" % i, 1)
for i in range(1, 6):
    c.obj("alpha%d" % i, 0)

def one(a, b, s):
    c.pts(a, b, [("x", s)])

# beta -> alpha
for b, lst in {1: [(1, "+"), (2, "+")], 2: [(1, "-"), (2, "-")], 3: [(1, "+"), (3, "+")],
               4: [(1, "-"), (3, "-")], 5: [(2, "-"), (3, "+")], 6: [(2, "+"), (3, "-")],
               7: [(3, "+"), (4, "+")], 8: [(2, "-"), (5, "+")]}.items():
    for a, s in lst:
        one("beta%d" % b, "alpha%d" % a, s)
c.pts("beta9", "alpha4", [("p", "+"), ("m", "-")])
c.pts("beta10", "alpha5", [("p", "+"), ("m", "-")])

# gamma -> beta
for g, lst in {1: [(1, "+"), (2, "+")], 2: [(1, "+"), (3, "-"), (5, "+")],
               3: [(2, "-"), (4, "+"), (6, "-")], 4: [(3, "+"), (4, "+")],
               5: [(5, "+"), (6, "+"), (10, "+")], 6: [(5, "-"), (6, "-"), (9, "+")],
               7: [(9, "+")], 8: [(10, "+")], 9: [(11, "+"), (12, "+")],
               10: [(12, "+")], 11: [(11, "+")]}.items():
    for b, s in lst:
        one("gamma%d" % g, "beta%d" % b, s)
for g, b in [(1, 8), (5, 8), (4, 7), (6, 7)]:
    c.pts("gamma%d" % g, "beta%d" % b, [("P", "+"), ("M", "-")])

def iv(g, a, e1, e2, fr):
    # e = (beta index, lower id, upper id)
    c.interval("gamma%d" % g, "alpha%d" % a, ("beta%d" % e1[0], e1[1], e1[2]),
               ("beta%d" % e2[0], e2[1], e2[2]), fr)

x = "x"
iv(1, 1, (1, x, x), (2, x, x), 0)
iv(1, 2, (1, x, x), (8, x, "P"), 0)
iv(1, 2, (2, x, x), (8, x, "M"), 0)
iv(1, 5, (8, x, "P"), (8, x, "M"), 0)
iv(2, 1, (1, x, x), (3, x, x), 0)
iv(2, 2, (1, x, x), (5, x, x), 0)
iv(2, 3, (3, x, x), (5, x, x), 0)
iv(3, 1, (2, x, x), (4, x, x), 0)
iv(3, 2, (2, x, x), (6, x, x), 1)
iv(3, 3, (4, x, x), (6, x, x), 0)
iv(4, 1, (3, x, x), (4, x, x), 0)
iv(4, 3, (3, x, x), (7, x, "M"), 1)
iv(4, 3, (4, x, x), (7, x, "P"), 0)
iv(4, 4, (7, x, "P"), (7, x, "M"), 0)
iv(5, 2, (5, x, x), (8, x, "M"), 0)
iv(5, 2, (6, x, x), (8, x, "P"), 0)
iv(5, 3, (5, x, x), (6, x, x), 0)
iv(5, 5, (8, x, "P"), (10, "m", x), 1)
iv(5, 5, (8, x, "M"), (10, "p", x), 0)
iv(6, 2, (5, x, x), (6, x, x), 1)
iv(6, 3, (5, x, x), (7, x, "P"), 0)
iv(6, 3, (6, x, x), (7, x, "M"), 0)
iv(6, 4, (7, x, "P"), (9, "m", x), 1)
iv(6, 4, (7, x, "M"), (9, "p", x), 0)
iv(7, 4, (9, "p", x), (9, "m", x), 1)
iv(8, 5, (10, "p", x), (10, "m", x), 1)
c.write(sys.argv[1] + "/pretzel_m2_2_2_q-6.ffc")
