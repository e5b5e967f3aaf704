from __future__ import annotations

from typing import Mapping

from .poly import MultiPoly, _is_scalar
from .ratfunc import RationalFunction


class SubstitutionMap:
    """A ring homomorphism given by images of variables.

    ``strict`` lists the variables the source may use; anything else raises.
    """

    def __init__(self, images: Mapping[str, object], strict: bool = False, allowed=()):
        self.images = dict(images)
        self.strict = strict
        self.allowed = set(allowed) | set(self.images)

    def _check(self, f):
        polys = [f] if isinstance(f, MultiPoly) else [f.num, f.den]
        for p in polys:
            used = p.used_vars()
            if self.strict:
                bad = [v for v in used if v not in self.allowed]
                if bad:
                    raise ValueError(f"unknown variable(s) {', '.join(bad)}")
            for v in used:
                if v in self.images and p.min_degree(v) < 0:
                    img = self.images[v]
                    ok = (
                        (_is_scalar(img) and img != 0)
                        or (isinstance(img, MultiPoly) and img.is_monomial())
                        or (isinstance(img, RationalFunction) and not img.num.is_zero())
                    )
                    if not ok:
                        raise ValueError(f"image of {v} is not invertible")

    def __call__(self, f):
        if _is_scalar(f):
            return MultiPoly.const(f)
        self._check(f)
        return f.subs(self.images)

    def then(self, other: "SubstitutionMap") -> "SubstitutionMap":
        """Composite: apply self first, then other."""
        imgs = {}
        for v, img in self.images.items():
            imgs[v] = other(img) if not _is_scalar(img) else img
        for v, img in other.images.items():
            imgs.setdefault(v, img)
        return SubstitutionMap(imgs, self.strict, self.allowed)
