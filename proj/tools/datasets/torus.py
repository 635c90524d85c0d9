import sys
from ffcgen import Cat

c = Cat("torus knot T(3,4), q = 11", quantum=11)
for i in (4, 5, 6, 7, 9):
    c.obj("a%d" % i, 2)
for i in (11, 14, 15, 16, 17, 20, 21, 22, 23):
    c.obj("a%d" % i, 3)
for i in (25, 26, 27, 28, 30):
    c.obj("a%d" % i, 4)

P = lambda *s: [(x, "+" if x[0] in "pP" else "-") for x in s]
c.pts("a11", "a4", P("p")); c.pts("a11", "a7", P("p"))
c.pts("a16", "a7", P("p", "m")); c.pts("a16", "a5", P("P", "M"))
c.pts("a17", "a6", P("P", "M"))
c.pts("a14", "a7", P("p")); c.pts("a14", "a9", P("m"))
c.pts("a15", "a7", P("p")); c.pts("a15", "a9", P("p"))
c.pts("a20", "a6", P("p")); c.pts("a20", "a9", P("p"))
c.pts("a21", "a6", P("p")); c.pts("a21", "a9", P("m"))
c.pts("a22", "a5", P("p")); c.pts("a22", "a9", P("m"))
c.pts("a23", "a5", P("p")); c.pts("a23", "a9", P("p"))
c.pts("a25", "a11", P("P", "M")); c.pts("a25", "a16", P("P"))
c.pts("a26", "a17", P("P"))
c.pts("a27", "a15", P("P")); c.pts("a27", "a14", P("M"))
c.pts("a27", "a22", P("P")); c.pts("a27", "a23", P("M"))
c.pts("a28", "a15", P("M")); c.pts("a28", "a21", P("M"))
c.pts("a28", "a20", P("P")); c.pts("a28", "a14", P("P"))
c.pts("a30", "a22", P("P")); c.pts("a30", "a21", P("M"))
c.pts("a30", "a23", P("M")); c.pts("a30", "a20", P("P"))

iv = c.interval
iv("a25", "a4", ("a11", "p", "P"), ("a11", "p", "M"), 0)
iv("a25", "a5", ("a16", "P", "P"), ("a16", "M", "P"), 0)
iv("a25", "a7", ("a11", "p", "P"), ("a16", "m", "P"), 0)
iv("a25", "a7", ("a11", "p", "M"), ("a16", "p", "P"), 0)
iv("a26", "a6", ("a17", "P", "P"), ("a17", "M", "P"), 0)
iv("a27", "a5", ("a22", "p", "P"), ("a23", "p", "M"), 0)
iv("a27", "a7", ("a14", "p", "M"), ("a15", "p", "P"), 0)
iv("a27", "a9", ("a14", "m", "M"), ("a23", "p", "M"), 1)
iv("a27", "a9", ("a15", "p", "P"), ("a22", "m", "P"), 0)
iv("a28", "a6", ("a20", "p", "P"), ("a21", "p", "M"), 0)
iv("a28", "a7", ("a14", "p", "P"), ("a15", "p", "M"), 0)
iv("a28", "a9", ("a14", "m", "P"), ("a21", "m", "M"), 0)
iv("a28", "a9", ("a15", "p", "M"), ("a20", "p", "P"), 0)
iv("a30", "a5", ("a22", "p", "P"), ("a23", "p", "M"), 1)
iv("a30", "a6", ("a20", "p", "P"), ("a21", "p", "M"), 0)
iv("a30", "a9", ("a20", "p", "P"), ("a23", "p", "M"), 0)
iv("a30", "a9", ("a21", "m", "M"), ("a22", "m", "P"), 0)
c.write(sys.argv[1])
