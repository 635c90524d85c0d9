import sys
from ffcgen import Cat


def block(c):
    c.obj("gamma", 6, "(3,3)")
    c.obj("beta1", 5, "(2,3)")
    c.obj("beta2", 5, "(3,2)")
    c.obj("alpha", 4, "(2,2)")
    c.pts("gamma", "beta1", [("P0", "+"), ("P1", "+")])
    c.pts("gamma", "beta2", [("Pt0", "-"), ("Pt1", "-")])
    c.pts("beta1", "alpha", [("p0", "+"), ("p1", "+")])
    c.pts("beta2", "alpha", [("pt0", "+"), ("pt1", "+")])
    iv = c.interval
    iv("gamma", "alpha", ("beta1", "p0", "P0"), ("beta2", "pt0", "Pt0"), 0)
    iv("gamma", "alpha", ("beta1", "p0", "P1"), ("beta2", "pt1", "Pt0"), 0)
    iv("gamma", "alpha", ("beta1", "p1", "P0"), ("beta2", "pt0", "Pt1"), 0)
    iv("gamma", "alpha", ("beta1", "p1", "P1"), ("beta2", "pt1", "Pt1"), 0)


c = Cat("two trefoils, q = 14", quantum=14)
block(c)
c.obj("outer1", 5, "(2,3) outer")
c.obj("outer2", 5, "(3,2) outer")
c.write(sys.argv[1] + "/two_trefoils_q14.ffc")

c = Cat("two trefoils, q = 14, auxiliary category with epsilon1 = epsilon2 = 0", quantum=14)
block(c)
c.obj("tau", 6)
c.obj("sigma", 5)
c.pts("tau", "beta1", [("m", "-")])
c.pts("tau", "beta2", [("p", "+")])
c.pts("tau", "sigma", [("p", "+")])
c.interval("tau", "alpha", ("beta1", "p0", "m"), ("beta2", "pt1", "p"), 0, "e1")
c.interval("tau", "alpha", ("beta1", "p1", "m"), ("beta2", "pt0", "p"), 0, "e2")
c.write(sys.argv[1] + "/two_trefoils_aux.ffc")
