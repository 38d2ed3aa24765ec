"""The identity-component correspondence for graded rings.

Ideals of the identity component S_e are handled as bitmasks over the
ambient ring, confined to S_e.  Their lattice is enumerated by reusing the
finite-ring lattice engine on the induced subring, then mapping indices
back, so one enumeration kernel serves both ambient rings.

The two ``verify_*`` operations return structured reports rather than
booleans: each check carries a name, a verdict and counts, and serializes to
stable ``check <name>: PASS|FAIL (<details>)`` lines for CI logs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .finring import (
    Caps,
    DEFAULT_CAPS,
    Ideal,
    all_ideals,
    bits,
    closed_product,
    generate_ideal,
    mask_of,
    set_product,
    subgroup_closure,
)
from .grading import (
    GradedRing,
    all_graded_ideals,
    classify_grading,
    is_graded_ideal,
    is_graded_prime_ideal,
)


def e_component(graded: GradedRing, xmask: int) -> int:
    """Image of a subset under the projection onto the identity component.

    For a graded ideal this coincides with intersecting with S_e.
    """
    out = 0
    for m in bits(xmask):
        out |= 1 << graded.e_part(m)
    return out


def base_ideals(graded: GradedRing, caps: Caps = DEFAULT_CAPS) -> tuple[int, ...]:
    """All ideals of the identity component, as ambient masks, sorted."""
    sub, old, _ = graded.base
    out = []
    for ideal in all_ideals(sub, caps):
        out.append(mask_of(old[i] for i in bits(ideal.members)))
    return tuple(sorted(out))


def is_base_ideal(graded: GradedRing, jmask: int) -> bool:
    """Whether a subset of S_e is a two-sided ideal of the subring S_e."""
    ring = graded.ring
    emask = graded.e_mask
    if jmask & ~emask:
        return False
    if not jmask >> ring.zero & 1:
        return False
    for x in bits(jmask):
        for y in bits(jmask):
            if not jmask >> ring.add(x, y) & 1:
                return False
        for r in bits(emask):
            if not jmask >> ring.mul(r, x) & 1:
                return False
            if not jmask >> ring.mul(x, r) & 1:
                return False
    return True


def _invariance_sites(graded: GradedRing):
    group = graded.group
    if group.is_finite:
        return list(group.elements())
    return [x for x in graded.support if graded.component(group.inverse(x)).bit_count() > 1]


def is_g_invariant(graded: GradedRing, jmask: int) -> bool:
    """Whether conjugating J by every component pair lands back inside J."""
    if not is_base_ideal(graded, jmask):
        raise ValueError("subset is not an ideal of the identity component")
    ring = graded.ring
    group = graded.group
    for x in _invariance_sites(graded):
        sxi = graded.component(group.inverse(x))
        sx = graded.component(x)
        conj = subgroup_closure(
            ring, set_product(ring, set_product(ring, sxi, jmask), sx)
        )
        if conj | jmask != jmask:
            return False
    return True


def invariant_base_ideals(graded: GradedRing, caps: Caps = DEFAULT_CAPS) -> tuple[int, ...]:
    return tuple(j for j in base_ideals(graded, caps) if is_g_invariant(graded, j))


def is_g_prime_ideal(graded: GradedRing, qmask: int, caps: Caps = DEFAULT_CAPS) -> bool:
    """Primeness quantified over invariant ideals of the identity component."""
    if qmask != graded.e_mask and not is_g_invariant(graded, qmask):
        raise ValueError("subset is not an invariant ideal")
    if qmask == graded.e_mask:
        raise ValueError("ideal must be proper in the identity component")
    ring = graded.ring
    invariant = invariant_base_ideals(graded, caps)
    for a in invariant:
        for b in invariant:
            prod = closed_product(ring, a, b)
            if prod | qmask == qmask:
                if a | qmask != qmask and b | qmask != qmask:
                    return False
    return True


def is_g_prime_base(graded: GradedRing, caps: Caps = DEFAULT_CAPS) -> bool:
    """Whether the zero ideal of the identity component is invariant-prime."""
    if graded.e_mask == graded.ring.zero_mask:
        raise ValueError("identity component is the zero ring")
    return is_g_prime_ideal(graded, graded.ring.zero_mask, caps)


def is_identity_generated(graded: GradedRing, ideal: Ideal) -> bool:
    """Whether the graded ideal is generated by its identity component."""
    if not is_graded_ideal(graded, ideal):
        raise ValueError("ideal is not graded")
    regenerated = generate_ideal(graded.ring, bits(e_component(graded, ideal.members)))
    return regenerated.members == ideal.members


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    details: str = ""


@dataclass(frozen=True)
class Report:
    title: str
    checks: tuple[CheckResult, ...]

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self.checks)

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            verdict = "PASS" if c.passed else "FAIL"
            detail = f" ({c.details})" if c.details else ""
            out.append(f"check {c.name}: {verdict}{detail}")
        return out

    def render(self) -> str:
        return "\n".join(self.lines())


def verify_bijection_identity_generated(graded: GradedRing, caps: Caps = DEFAULT_CAPS) -> Report:
    """Exhaustively check the correspondence between invariant ideals of the
    identity component and identity-generated graded ideals.

    Every check here is a theorem for any grading; a FAIL line indicates an
    implementation defect, not a property of the input.
    """
    ring = graded.ring
    invariant = invariant_base_ideals(graded, caps)
    graded_ideals = all_graded_ideals(graded, caps)
    idgen = [i for i in graded_ideals if is_identity_generated(graded, i)]
    idgen_masks = {i.members for i in idgen}

    generated = {}
    gen_graded = True
    gen_idgen = True
    restrict_ok = True
    for j in invariant:
        lifted = generate_ideal(ring, bits(j))
        generated[j] = lifted.members
        if not is_graded_ideal(graded, lifted):
            gen_graded = False
        elif not is_identity_generated(graded, lifted):
            gen_idgen = False
        if e_component(graded, lifted.members) != j:
            restrict_ok = False

    expand_ok = True
    projection_invariant = True
    for i in graded_ideals:
        proj = e_component(graded, i.members)
        if not is_g_invariant(graded, proj):
            projection_invariant = False
        if i.members in idgen_masks:
            if generate_ideal(ring, bits(proj)).members != i.members:
                expand_ok = False

    image_ok = set(generated.values()) == idgen_masks and len(generated) == len(idgen_masks)

    inclusion_ok = True
    for j1 in invariant:
        for j2 in invariant:
            if j1 | j2 == j2 and generated[j1] | generated[j2] != generated[j2]:
                inclusion_ok = False
    for i1 in idgen:
        for i2 in idgen:
            if i1.members | i2.members == i2.members:
                p1 = e_component(graded, i1.members)
                p2 = e_component(graded, i2.members)
                if p1 | p2 != p2:
                    inclusion_ok = False

    n_inv, n_idgen = len(invariant), len(idgen)
    checks = (
        CheckResult("lift_is_graded", gen_graded, f"{n_inv} invariant ideals"),
        CheckResult("lift_is_identity_generated", gen_idgen, f"{n_inv} invariant ideals"),
        CheckResult("lift_then_restrict_is_identity", restrict_ok, f"{n_inv} invariant ideals"),
        CheckResult("restrict_then_lift_is_identity", expand_ok, f"{n_idgen} identity-generated ideals"),
        CheckResult("projection_is_invariant", projection_invariant, f"{len(graded_ideals)} graded ideals"),
        CheckResult("lift_image_matches", image_ok, f"{n_inv} invariant vs {n_idgen} identity-generated"),
        CheckResult("inclusion_preserved", inclusion_ok, "both directions"),
    )
    return Report("identity-generated correspondence", checks)


def verify_bijection_ideally_symmetric(graded: GradedRing, caps: Caps = DEFAULT_CAPS) -> Report:
    """For ideally symmetric gradings: the lift/restrict pair is a mutually
    inverse bijection onto *all* graded ideals and matches primeness.

    Raises if the grading is not ideally symmetric, since the statements
    quantify over that class only.
    """
    if not classify_grading(graded, caps).ideally_symmetrically:
        raise ValueError("grading is not ideally symmetric")
    ring = graded.ring
    invariant = invariant_base_ideals(graded, caps)
    graded_ideals = all_graded_ideals(graded, caps)

    recovery_ok = True
    for i in graded_ideals:
        proj = e_component(graded, i.members)
        left = closed_product(ring, ring.full_mask, proj)
        right = closed_product(ring, proj, ring.full_mask)
        lifted = generate_ideal(ring, bits(proj)).members
        if not (left == right == lifted == i.members):
            recovery_ok = False

    generated = {j: generate_ideal(ring, bits(j)).members for j in invariant}
    onto_ok = set(generated.values()) == {i.members for i in graded_ideals}
    inverse_ok = all(e_component(graded, generated[j]) == j for j in invariant)

    inclusion_ok = True
    for j1 in invariant:
        for j2 in invariant:
            if j1 | j2 == j2 and generated[j1] | generated[j2] != generated[j2]:
                inclusion_ok = False

    prime_match = True
    gprime = []
    for q in invariant:
        if q == graded.e_mask:
            continue
        lifted = generated[q]
        if lifted == ring.full_mask:
            prime_match = False
            continue
        q_prime = is_g_prime_ideal(graded, q, caps)
        lifted_prime = is_graded_prime_ideal(graded, Ideal(ring, lifted), caps)
        if q_prime != lifted_prime:
            prime_match = False
        if q_prime:
            gprime.append(lifted)
    graded_primes = [
        i.members
        for i in graded_ideals
        if i.is_proper and is_graded_prime_ideal(graded, i, caps)
    ]
    prime_sets_ok = sorted(gprime) == sorted(graded_primes)

    checks = (
        CheckResult("hypothesis_ideally_symmetric", True, ""),
        CheckResult(
            "graded_ideal_recovered_from_base",
            recovery_ok,
            f"{len(graded_ideals)} graded ideals",
        ),
        CheckResult(
            "lift_onto_all_graded_ideals",
            onto_ok,
            f"{len(invariant)} invariant vs {len(graded_ideals)} graded",
        ),
        CheckResult("maps_mutually_inverse", inverse_ok, ""),
        CheckResult("inclusion_preserved", inclusion_ok, ""),
        CheckResult(
            "prime_verdicts_match",
            prime_match,
            f"{sum(1 for q in invariant if q != graded.e_mask)} proper invariant ideals",
        ),
        CheckResult(
            "prime_sets_correspond",
            prime_sets_ok,
            f"{len(graded_primes)} graded prime ideals",
        ),
    )
    return Report("ideally symmetric correspondence", checks)
