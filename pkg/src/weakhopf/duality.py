"""The duality map phi from the double smash product into endomorphisms of
B#KG, the A1..A10 stratification of the double-smash basis, the candidate
identity elements, the skew-ring comparison map psi, and one verifier per
structural claim.

Claim ids: thm2.2 (kernel stratification), prop2.3 (the unital corner is
closed), prop2.4 (its identity element), prop2.5 (annihilation), thm2.6
(direct-sum decomposition), rem2.7 (exactness bookkeeping), thm2.9 (skew
ring comparison).
"""

from dataclasses import dataclass, field as dc_field

from .exactmath import Echelon, Matrix, kernel_basis, subspace_equal
from .report import Report
from .walg import el_add, el_norm, el_scale

STRATA = ("A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "A9", "A10")
UNCLASSIFIED = "unclassified"

KERNEL_STRATA = ("A3", "A4", "A5", "A6")
IMAGE_STRATA = ("A1", "A2", "A7", "A8", "A9", "A10")
UNITAL_STRATA = ("A1", "A7", "A10")
COMPLEMENT_STRATA = ("A2", "A8", "A9")

CLASSIFIER_RULES = [
    "A3: the pair (g, h) is not composable",
    "A1: composable; src(g) == tgt(g); component == tgt(g); vector lies in the image of g",
    "A7: composable; src(g) != tgt(g); component == src(g); vector lies in the image of g; hom(tgt(g), component) nonempty",
    "A10: as A7 but hom(tgt(g), component) empty (vacuous on valid groupoids: inv(g) always qualifies)",
    "A4: composable; vector outside the image of g; component != src(g); hom(tgt(g), component) empty",
    "A5: composable; vector outside the image of g; component == src(g); hom(tgt(g), component) empty; src(g) != tgt(g) (vacuous, see A10)",
    "A6: composable; vector outside the image of g; component != src(g); hom(tgt(g), component) nonempty",
    "A8: composable; vector outside the image of g; component == src(g) != tgt(g); hom(tgt(g), component) nonempty",
    "A2, A9: never assigned (their defining conjunctions are absorbed by A7 and A5)",
    "unclassified: inhomogeneous vector, or no rule matches",
]


def classify(groupoid, component, g, h, in_image):
    """Stratum of a homogeneous basis triple.

    component is the object whose piece of B carries the vector (None when
    the vector is not homogeneous); in_image says whether the vector lies
    in span{g.b : b basis}.
    """
    if component is None:
        return UNCLASSIFIED
    if not groupoid.composable(g, h):
        return "A3"
    loop = groupoid.src(g) == groupoid.tgt(g)
    in_bg = component == groupoid.tgt(g)
    ex_l = component == groupoid.src(g)
    reach = bool(groupoid.hom(groupoid.tgt(g), component))
    if in_image:
        if loop and in_bg:
            return "A1"
        if not loop and ex_l:
            return "A7" if reach else "A10"
        return UNCLASSIFIED
    if not ex_l and not reach:
        return "A4"
    if ex_l and not reach and not loop:
        return "A5"
    if not ex_l and reach:
        return "A6"
    if ex_l and reach and not loop and not in_bg:
        return "A8"
    return UNCLASSIFIED


def classify_basis(dsm, groupoid, decomp, action):
    """Stratum per double-smash basis label, plus the dimension table."""
    B = action.algebra
    spans = action.image_spans()
    assignment = {}
    dims = {s: 0 for s in STRATA}
    dims[UNCLASSIFIED] = 0
    for (b, g, h) in dsm.basis:
        e = decomp.component_of.get(b)
        in_img = spans[g].contains(B.to_vector(B.basis_element(b)))
        stratum = classify(groupoid, e, g, h, in_img)
        assignment[(b, g, h)] = stratum
        dims[stratum] += 1
    return assignment, dims


# -- the map phi ---------------------------------------------------------------


@dataclass
class LinearMapRep:
    """A linear map into endomorphisms of B#KG, stored per domain basis
    element as a column map: codomain basis label -> image element."""

    field: object
    domain_basis: list
    codomain_basis: list
    columns: dict           # domain label -> {codomain label: element dict}
    cod_index: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        if not self.cod_index:
            self.cod_index = {lab: i for i, lab in enumerate(self.codomain_basis)}

    def endo(self, domain_label):
        return self.columns[domain_label]

    def apply(self, element: dict) -> dict:
        """Endomorphism attached to a domain element (weighted sum)."""
        F = self.field
        out = {}
        for lab, c in element.items():
            for col, img in self.columns[lab].items():
                cur = out.setdefault(col, {})
                for row, w in img.items():
                    s = F.add(cur.get(row, F.zero), F.mul(c, w))
                    if s == F.zero:
                        cur.pop(row, None)
                    else:
                        cur[row] = s
        return {col: img for col, img in out.items() if img}

    def endo_to_vector(self, endo: dict):
        """Flatten an endomorphism to length dim(codomain)^2, row-major."""
        n = len(self.codomain_basis)
        v = [self.field.zero] * (n * n)
        for col, img in endo.items():
            j = self.cod_index[col]
            for row, w in img.items():
                v[self.cod_index[row] * n + j] = w
        return v

    def flatten(self) -> Matrix:
        n = len(self.codomain_basis)
        cols = [self.endo_to_vector(self.columns[lab]) for lab in self.domain_basis]
        entries = []
        for i in range(n * n):
            for cv in cols:
                entries.append(cv[i])
        return Matrix(self.field, n * n, len(self.domain_basis), entries)


def compose_endos(phi: LinearMapRep, first: dict, second: dict) -> dict:
    """first applied after second, as column maps on the codomain basis."""
    F = phi.field
    out = {}
    for col, img in second.items():
        acc = {}
        for mid, c in img.items():
            for row, w in first.get(mid, {}).items():
                s = F.add(acc.get(row, F.zero), F.mul(c, w))
                if s == F.zero:
                    acc.pop(row, None)
                else:
                    acc[row] = s
        if acc:
            out[col] = acc
    return out


def build_phi(dsm, bsm) -> LinearMapRep:
    """phi(a#u_g#r_h) sends b#u_l to (a#u_g)(b#u_l) when l == h, else 0."""
    for key in ("B", "kg", "action"):
        if dsm.meta.get(key) is not bsm.meta.get(key):
            raise ValueError("smash products come from different parents")
    F = dsm.field
    columns = {}
    for (a, g, h) in dsm.basis:
        left = {(a, g): F.one}
        col = {}
        for (b, l) in bsm.basis:
            if l != h:
                continue
            img = bsm.multiply(left, {(b, l): F.one})
            if img:
                col[(b, l)] = img
        columns[(a, g, h)] = col
    return LinearMapRep(F, list(dsm.basis), list(bsm.basis), columns)


def phi_is_homomorphism(phi: LinearMapRep, dsm) -> Report:
    """phi(xy) == phi(x) phi(y) over all domain basis pairs."""
    rep = Report("phi is multiplicative")
    for x in phi.domain_basis:
        ex = phi.endo(x)
        for y in phi.domain_basis:
            lhs = phi.apply(dsm.basis_product(x, y))
            rhs = compose_endos(phi, ex, phi.endo(y))
            if lhs != rhs:
                rep.add("phi-multiplicative", [list(x), list(y)])
    return rep


def right_linearity(phi: LinearMapRep, bsm, B) -> Report:
    """Whether each phi(x) commutes with right multiplication by
    b # (sum of identity legs); reported, never assumed."""
    F = phi.field
    g = bsm.meta["groupoid"]
    rep = Report("image endomorphisms are right B-linear")
    right_factors = {}
    for b in B.basis:
        right_factors[b] = {(b, e): F.one for e in g.objects}
    for x in phi.domain_basis:
        endo = phi.endo(x)
        for z in bsm.basis:
            ez = {z: F.one}
            for b in B.basis:
                zb = bsm.multiply(ez, right_factors[b])
                lhs = _apply_endo_to_element(phi, endo, zb)
                tz = endo.get(z, {})
                rhs = bsm.multiply(tz, right_factors[b])
                if lhs != rhs:
                    rep.add("right-linearity", [list(x), list(z), b])
    return rep


def _apply_endo_to_element(phi, endo, element):
    F = phi.field
    out = {}
    for lab, c in element.items():
        out = el_add(F, out, el_scale(F, c, endo.get(lab, {})))
    return out


@dataclass
class KernelImage:
    kernel: list      # vectors over the domain basis
    image: list       # flattened endomorphism vectors
    image_labels: list
    dims: dict


def kernel_and_image(phi: LinearMapRep) -> KernelImage:
    flat = phi.flatten()
    kernel = kernel_basis(flat)
    n = len(phi.codomain_basis)
    ech = Echelon(phi.field, n * n)
    image, image_labels = [], []
    for lab in phi.domain_basis:
        v = phi.endo_to_vector(phi.columns[lab])
        if ech.add(v):
            image.append(v)
            image_labels.append(lab)
    dims = {
        "domain": len(phi.domain_basis),
        "kernel": len(kernel),
        "image": len(phi.domain_basis) - len(kernel),
    }
    if dims["image"] != len(image):
        raise AssertionError("rank bookkeeping broke; kernel and image disagree")
    return KernelImage(kernel, image, image_labels, dims)


# -- identity candidates --------------------------------------------------------


def identity_candidates(B, action, groupoid):
    """Two candidates for an identity of the unital corner.

    The all-morphism sum follows the literal formula (one term per
    morphism l, carried by u at tgt(l)); the object sum dedups it to one
    term per object.  In the one-object case the first is |G| times the
    second, which is why both are kept and tested.
    """
    F = B.field
    ids = groupoid.morphism_ids()

    def tail(e):
        return [n for n in ids if groupoid.src(n) == e]

    y_morph = {}
    for l in ids:
        img = action.act({l: F.one}, B.unit)
        tl = groupoid.tgt(l)
        for n in tail(tl):
            for lab, c in img.items():
                key = (lab, tl, n)
                y_morph[key] = F.add(y_morph.get(key, F.zero), c)
    y_obj = {}
    for e in groupoid.objects:
        img = action.act({e: F.one}, B.unit)
        for n in tail(e):
            for lab, c in img.items():
                key = (lab, e, n)
                y_obj[key] = F.add(y_obj.get(key, F.zero), c)
    return el_norm(F, y_morph), el_norm(F, y_obj)


# -- psi -------------------------------------------------------------------------


@dataclass
class PsiRep:
    domain_basis: list    # ((b, g), h)
    images: dict          # domain label -> element of the double smash


def build_psi(skew, dsm, groupoid) -> PsiRep:
    """psi(b delta_g # r_h) = b # u_g # r_h, as an element of the double
    smash product."""
    F = dsm.field
    domain = [(sk, h) for sk in skew.basis for h in groupoid.morphism_ids()]
    images = {}
    for (sk, h) in domain:
        b, g = sk
        lab = (b, g, h)
        if lab not in dsm.index:
            raise ValueError(f"psi image {lab!r} is not a double-smash basis label")
        images[(sk, h)] = {lab: F.one}
    return PsiRep(domain, images)


# -- subspace helper -------------------------------------------------------------


class SubspaceTester:
    """Membership tester with a fast path for coordinate subspaces (every
    spanning vector supported on a single axis)."""

    def __init__(self, field, vectors, dim):
        self.field = field
        self.dim = dim
        self.axes = None
        if all(sum(1 for x in v if x != field.zero) == 1 for v in vectors):
            self.axes = {next(i for i, x in enumerate(v) if x != field.zero)
                         for v in vectors}
        else:
            self.ech = Echelon(field, dim)
            for v in vectors:
                self.ech.add(v)

    def contains(self, v):
        if self.axes is not None:
            return all(x == self.field.zero or i in self.axes
                       for i, x in enumerate(v))
        return self.ech.contains(v)


# -- claim verification -----------------------------------------------------------


@dataclass
class ClaimResult:
    claim: str
    holds: bool
    conditional: bool
    dimensions: dict
    witnesses: list
    notes: list

    def to_json(self):
        return {
            "claim": self.claim,
            "holds": self.holds,
            "conditional": self.conditional,
            "dimensions": self.dimensions,
            "witnesses": self.witnesses[:12],
            "witness_count": len(self.witnesses),
            "notes": self.notes,
        }


def label_str(lab):
    if isinstance(lab, tuple):
        if len(lab) == 3:
            return f"{lab[0]}#u_{lab[1]}#r_{lab[2]}"
        if len(lab) == 2 and isinstance(lab[0], tuple):
            return f"{lab[0][0]}*d_{lab[0][1]}#r_{lab[1]}"
        if len(lab) == 2:
            return f"{lab[0]}#u_{lab[1]}"
    return str(lab)


def element_str(field, element: dict) -> str:
    if not element:
        return "0"
    parts = []
    for lab in sorted(element, key=label_str):
        c = element[lab]
        parts.append(f"{field.show(c)}*{label_str(lab)}" if c != field.one
                     else label_str(lab))
    return " + ".join(parts)


CLAIM_IDS = ("thm2.2", "prop2.3", "prop2.4", "prop2.5", "thm2.6", "rem2.7", "thm2.9")


class VerificationContext:
    """Everything the claim verifiers need, built once per instance."""

    def __init__(self, instance):
        from . import action as action_mod
        from . import smash as smash_mod
        from . import walg as walg_mod
        from .groupoid import validate_groupoid

        self.instance = instance
        self.field = instance.field
        self.groupoid = instance.groupoid
        self.B = instance.algebra
        self.action = instance.action

        self.groupoid_report = validate_groupoid(self.groupoid)
        self.b_report = Report("algebra B axioms")
        for w in self.B.associativity_violations():
            self.b_report.add("b-associativity", list(w))
        for w in self.B.unit_violations():
            self.b_report.add("b-unit", list(w))

        self.kg, self.kg_co = walg_mod.groupoid_algebra(self.field, self.groupoid)
        self.kgstar, self.kgstar_co = walg_mod.dual_weak_hopf(self.kg, self.kg_co)

        self.module_report = action_mod.check_module_algebra(
            self.B, self.kg, self.kg_co, self.action)
        self.decomp, self.decomp_report = action_mod.component_decomposition(
            self.B, self.kg, self.action)

        self.bsm = smash_mod.smash_product(self.B, self.kg, self.action)
        self.dsm = smash_mod.double_smash(
            self.B, self.kg, self.kgstar, self.kgstar_co, self.action)
        self.phi = build_phi(self.dsm, self.bsm)
        self.classification, self.strata_dims = classify_basis(
            self.dsm, self.groupoid, self.decomp, self.action)
        self.ki = kernel_and_image(self.phi)
        self.y_morph, self.y_obj = identity_candidates(
            self.B, self.action, self.groupoid)

        self._dfap = None
        self._dfap_report = None
        self._skew = None
        self._skew_error = None

    # -- lazily derived pieces ------------------------------------------------

    def dfap(self):
        if self._dfap is None:
            from .action import derive_dfap_action
            self._dfap, self._dfap_report = derive_dfap_action(
                self.B, self.kg, self.action, self.decomp)
        return self._dfap, self._dfap_report

    def skew(self):
        if self._skew is None and self._skew_error is None:
            from .action import skew_groupoid_ring
            dfap, _ = self.dfap()
            try:
                self._skew = skew_groupoid_ring(self.B, self.action, dfap)
            except ValueError as exc:
                self._skew_error = str(exc)
        return self._skew, self._skew_error

    # -- helpers ----------------------------------------------------------------

    def stratum_labels(self, names):
        wanted = set(names)
        return [lab for lab in self.dsm.basis if self.classification[lab] in wanted]

    def stratum_vectors(self, names):
        return [self.dsm.to_vector({lab: self.field.one})
                for lab in self.stratum_labels(names)]

    @property
    def classification_total(self):
        return self.strata_dims[UNCLASSIFIED] == 0

    @property
    def validated(self):
        return (self.groupoid_report.ok and self.b_report.ok
                and self.module_report.ok and self.decomp_report.ok)

    def diagnostics(self):
        """Human-readable list naming every violated axiom or convention."""
        out = []
        for name, rep in (("groupoid", self.groupoid_report),
                          ("algebra B", self.b_report),
                          ("module algebra", self.module_report),
                          ("decomposition", self.decomp_report)):
            for check in rep.checks_failed():
                n = sum(1 for f in rep.findings if f.check == check)
                first = next(f for f in rep.findings if f.check == check)
                out.append(f"{name}: {check} violated {n} time(s), "
                           f"first witness {first.witness!r}")
        if not self.classification_total:
            out.append(f"classification partial: {self.strata_dims[UNCLASSIFIED]} "
                       f"of {self.dsm.dim} basis vectors unclassified")
        return out

    def _result(self, claim, holds, dims, witnesses, notes):
        conditional = not (self.validated and self.classification_total)
        if conditional:
            notes = list(notes) + self.diagnostics()
        return ClaimResult(claim, holds, conditional, dims, witnesses, notes)

    # -- verifiers ----------------------------------------------------------------

    def verify(self, claim_id: str) -> ClaimResult:
        try:
            fn = getattr(self, "_verify_" + claim_id.replace(".", "_"))
        except AttributeError:
            raise ValueError(f"unknown claim id {claim_id!r}") from None
        return fn()

    def verify_all(self):
        return [self.verify(cid) for cid in CLAIM_IDS]

    def _verify_thm2_2(self) -> ClaimResult:
        F = self.field
        kernel = self.ki.kernel
        span_ker_strata = self.stratum_vectors(KERNEL_STRATA)
        eq = subspace_equal(F, kernel, span_ker_strata)
        witnesses = []
        if not eq:
            tester = SubspaceTester(F, span_ker_strata, self.dsm.dim)
            for v in kernel:
                if not tester.contains(v):
                    witnesses.append({"kernel_vector_outside_strata":
                                      element_str(F, self.dsm.from_vector(v))})
            ker_tester = SubspaceTester(F, kernel, self.dsm.dim)
            for v, lab in zip(span_ker_strata, self.stratum_labels(KERNEL_STRATA)):
                if not ker_tester.contains(v):
                    witnesses.append({"stratum_vector_outside_kernel": label_str(lab)})
        disjoint = {}
        ker_ech = Echelon(F, self.dsm.dim)
        for v in kernel:
            ker_ech.add(v)
        for name in IMAGE_STRATA:
            ok = True
            probe = Echelon(F, self.dsm.dim)
            for v in ker_ech.rows:
                probe.add(v)
            for lab in self.stratum_labels([name]):
                v = self.dsm.to_vector({lab: F.one})
                if not probe.add(v):
                    ok = False
                    witnesses.append({"stratum_meets_kernel": [name, label_str(lab)]})
            disjoint[name] = ok
        dims = dict(self.ki.dims)
        dims["strata"] = dict(self.strata_dims)
        dims["kernel_strata_span"] = len(span_ker_strata)
        holds = eq and all(disjoint.values())
        notes = [f"kernel equals the span of A3+A4+A5+A6: {eq}"]
        return self._result("thm2.2", holds, dims, witnesses, notes)

    def _closure_check(self, names):
        allowed = set(self.stratum_labels(names))
        witnesses = []
        for x in allowed:
            for y in allowed:
                prod = self.dsm.basis_product(x, y)
                bad = [lab for lab in prod if lab not in allowed]
                if bad:
                    witnesses.append({"product_escapes": [label_str(x), label_str(y)],
                                      "offending": [label_str(b) for b in bad]})
        return witnesses

    def _verify_prop2_3(self) -> ClaimResult:
        witnesses = self._closure_check(UNITAL_STRATA)
        dims = {"span_dim": len(self.stratum_labels(UNITAL_STRATA))}
        return self._result("prop2.3", not witnesses, dims, witnesses,
                            ["products of A1+A7+A10 basis vectors stay in that span"])

    def _candidates(self):
        return (("all-morphism-sum", self.y_morph), ("object-sum", self.y_obj))

    def _verify_prop2_4(self) -> ClaimResult:
        F = self.field
        corner = self.stratum_labels(UNITAL_STRATA)
        corner_set = set(corner)
        witnesses = []
        passing = []
        notes = []
        for name, y in self._candidates():
            ok = True
            for z in corner:
                ez = {z: F.one}
                if self.dsm.multiply(y, ez) != ez or self.dsm.multiply(ez, y) != ez:
                    ok = False
                    witnesses.append({"candidate": name, "not_fixed": label_str(z)})
            in_span = all(lab in corner_set for lab in y)
            idem = self.dsm.multiply(y, y) == y
            notes.append(f"candidate {name}: identity on the corner: {ok}; "
                         f"supported inside the corner: {in_span}; idempotent: {idem}")
            if ok:
                passing.append(name)
        dims = {"corner_dim": len(corner),
                "candidate_terms": {n: len(y) for n, y in self._candidates()}}
        return self._result("prop2.4", bool(passing), dims, witnesses, notes)

    def _verify_prop2_5(self) -> ClaimResult:
        F = self.field
        a2 = self.stratum_labels(["A2"])
        right = self.stratum_labels(COMPLEMENT_STRATA[1:])  # A8, A9
        witnesses = []
        passing = []
        notes = []
        for name, y in self._candidates():
            ok = True
            for z in a2:
                if self.dsm.multiply(y, {z: F.one}):
                    ok = False
                    witnesses.append({"candidate": name, "left_survivor": label_str(z)})
            for z in right:
                if self.dsm.multiply({z: F.one}, y):
                    ok = False
                    witnesses.append({"candidate": name, "right_survivor": label_str(z)})
            if ok:
                passing.append(name)
        if not a2 and not right:
            notes.append("A2, A8 and A9 are empty here, so annihilation is vacuous")
        dims = {"A2": len(a2), "A8+A9": len(right)}
        return self._result("prop2.5", bool(passing), dims, witnesses, notes)

    def _verify_thm2_6(self) -> ClaimResult:
        F = self.field
        kernel = self.ki.kernel
        s_vectors = self.stratum_vectors(IMAGE_STRATA)
        dim = self.dsm.dim
        ech = Echelon(F, dim)
        for v in kernel:
            ech.add(v)
        enlarged = [ech.add(v) for v in s_vectors]
        decomposes = (all(enlarged) and ech.rank == dim
                      and len(kernel) + len(s_vectors) == dim)

        sp_dim = len(self.stratum_labels(UNITAL_STRATA))
        t_dim = len(self.stratum_labels(COMPLEMENT_STRATA))
        split = sp_dim + t_dim == len(s_vectors)

        witnesses = []
        closed = True
        for part, names in (("S", IMAGE_STRATA), ("S'", UNITAL_STRATA),
                            ("T", COMPLEMENT_STRATA)):
            for w in self._closure_check(names):
                closed = False
                witnesses.append({"summand": part, **w})

        ker_tester = SubspaceTester(F, kernel, dim)
        ideal_ok = True
        for v in kernel:
            dv = self.dsm.from_vector(v)
            for z in self.dsm.basis:
                ez = {z: F.one}
                for prod in (self.dsm.multiply(dv, ez), self.dsm.multiply(ez, dv)):
                    if prod and not ker_tester.contains(self.dsm.to_vector(prod)):
                        ideal_ok = False
                        witnesses.append({"kernel_not_ideal_at": label_str(z)})
        dims = {"dim": dim, "kernel": len(kernel), "S": len(s_vectors),
                "S'": sp_dim, "T": t_dim}
        holds = decomposes and split and ideal_ok and closed
        notes = [f"whole space = kernel (+) image strata: {decomposes}",
                 f"image strata split as unital corner (+) complement: {split}",
                 f"each summand multiplicatively closed: {closed}",
                 f"kernel is a two-sided ideal: {ideal_ok}"]
        return self._result("thm2.6", holds, dims, witnesses, notes)

    def _verify_rem2_7(self) -> ClaimResult:
        F = self.field
        s_labels = self.stratum_labels(IMAGE_STRATA)
        phi_s = [self.phi.endo_to_vector(self.phi.columns[lab]) for lab in s_labels]
        rank_phi_s = 0
        ech = Echelon(F, len(self.phi.codomain_basis) ** 2)
        for v in phi_s:
            if ech.add(v):
                rank_phi_s += 1
        exact = self.ki.dims["kernel"] + rank_phi_s == self.ki.dims["domain"]
        same_image = subspace_equal(F, phi_s, self.ki.image) if phi_s or self.ki.image else True
        dims = {"kernel": self.ki.dims["kernel"], "phi_of_S": rank_phi_s,
                "domain": self.ki.dims["domain"], "image": self.ki.dims["image"]}
        holds = exact and same_image
        notes = [f"dim kernel + dim phi(S) == dim domain: {exact}",
                 f"phi(S) equals the full image: {same_image}"]
        return self._result("rem2.7", holds, dims, [], notes)

    def _verify_thm2_9(self) -> ClaimResult:
        F = self.field
        skew, err = self.skew()
        if skew is None:
            return self._result("thm2.9", False, {}, [],
                                [f"skew ring unavailable: {err}"])
        _, dfap_report = self.dfap()
        psi = build_psi(skew, self.dsm, self.groupoid)
        dom = psi.domain_basis
        dom_index = {lab: i for i, lab in enumerate(dom)}
        n_dom = len(dom)

        def dom_vector(labels):
            out = []
            for lab in labels:
                v = [F.zero] * n_dom
                v[dom_index[lab]] = F.one
                out.append(v)
            return out

        d1_labels = [lab for lab in dom if not self.groupoid.composable(lab[0][1], lab[1])]
        c_labels = [lab for lab in dom if self.groupoid.composable(lab[0][1], lab[1])]

        # kernel of phi o psi
        ncod = len(self.phi.codomain_basis)
        entries = []
        cols = [self.phi.endo_to_vector(self.phi.apply(psi.images[lab])) for lab in dom]
        for i in range(ncod * ncod):
            for cv in cols:
                entries.append(cv[i])
        flat = Matrix(F, ncod * ncod, n_dom, entries)
        ker = kernel_basis(flat)
        d1_eq_kernel = subspace_equal(F, dom_vector(d1_labels), ker)

        # whole = C (+) D1
        whole_ok = len(d1_labels) + len(c_labels) == n_dom

        # rank of phi(psi(C)) and exactness bookkeeping
        ech = Echelon(F, ncod * ncod)
        rank_c = 0
        for lab in c_labels:
            if ech.add(self.phi.endo_to_vector(self.phi.apply(psi.images[lab]))):
                rank_c += 1
        exact = len(d1_labels) + rank_c == n_dom

        # psi injective on C
        ech_c = Echelon(F, self.dsm.dim)
        inj = all(ech_c.add(self.dsm.to_vector(psi.images[lab])) for lab in c_labels)

        # psi(B0) == span(A1)
        b0 = [lab for lab in c_labels
              if self.groupoid.src(lab[0][1]) == self.groupoid.tgt(lab[0][1])]
        psi_b0 = [self.dsm.to_vector(psi.images[lab]) for lab in b0]
        a1 = self.stratum_vectors(["A1"])
        b0_eq_a1 = subspace_equal(F, psi_b0, a1)

        dims = {"skew_smash_dim": n_dom, "D1": len(d1_labels), "C": len(c_labels),
                "phi_psi_C": rank_c, "kernel_phi_psi": len(ker),
                "B0": len(b0), "A1": len(a1)}
        witnesses = []
        if not dfap_report.ok:
            for check in dfap_report.checks_failed():
                witnesses.append({"derived_action": check})
        holds = d1_eq_kernel and whole_ok and exact and inj and b0_eq_a1 \
            and dfap_report.ok
        notes = [f"D1 equals ker(phi o psi): {d1_eq_kernel}",
                 f"whole = C (+) D1: {whole_ok}",
                 f"dim D1 + dim phi(psi(C)) == dim: {exact}",
                 f"psi injective on C: {inj}",
                 f"psi(B0) equals span(A1): {b0_eq_a1}"]
        return self._result("thm2.9", holds, dims, witnesses, notes)
