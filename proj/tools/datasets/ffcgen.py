"""Small helpers to emit .ffc documents."""
import json


class Cat:
    def __init__(self, name, quantum=None):
        self.name = name
        self.quantum = quantum
        self.objects = []
        self.m0 = {}
        self.m1 = {}
        self.ncomp = 0

    def obj(self, oid, deg, label=None):
        o = {"id": oid, "degree": deg}
        if self.quantum is not None:
            o["quantum"] = self.quantum
        if label:
            o["label"] = label
        self.objects.append(o)

    def pts(self, a, b, points):
        """points: list of (id, '+'/'-')"""
        self.m0[(a, b)] = [{"id": i, "sign": s} for i, s in points]

    def _cid(self, cid):
        if cid is None:
            self.ncomp += 1
            cid = "c%d" % self.ncomp
        return cid

    def interval(self, a, b, start, end, fr, cid=None):
        """start/end: (mid, lower, upper)"""
        self.m1.setdefault((a, b), []).append({
            "kind": "interval", "framing": fr,
            "start": {"mid": start[0], "lower": start[1], "upper": start[2]},
            "end": {"mid": end[0], "lower": end[1], "upper": end[2]},
            "id": self._cid(cid)})

    def circle(self, a, b, fr, cid=None):
        self.m1.setdefault((a, b), []).append({"kind": "circle", "framing": fr, "id": self._cid(cid)})

    def doc(self):
        return {
            "name": self.name,
            "objects": self.objects,
            "moduli0": [{"from": a, "to": b, "points": p} for (a, b), p in self.m0.items()],
            "moduli1": [{"from": a, "to": b, "components": c} for (a, b), c in self.m1.items()],
        }

    def write(self, path):
        with open(path, "w") as f:
            json.dump(self.doc(), f, indent=2, ensure_ascii=False)
            f.write("\n")
