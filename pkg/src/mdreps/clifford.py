"""Little-groups machine for the semidirect product Z^(n choose 2) x| Sym_n:
characters of the free-abelian subgroup, their symmetric-group stabilizers and
orbits, canonical coset transversals, induction to the full group, and the
small-dimension classification of irreducibles.

Also home to the symmetric-group character machinery (partitions and the
Murnaghan-Nakayama rule) used for decomposing semisimple quotients.
"""

from fractions import Fraction

from .matrix import ExactMatrix, commutant_basis
from .mdd import (all_permutations, perm_compose, perm_identity, perm_inverse,
                  perm_sign, perm_to_adjacent_word)
from .scalar import RF, NonVanishing, param, rf


# ---------------------------------------------------------------------------
# symmetric group characters (Murnaghan-Nakayama)

def partitions(n, cap=None):
    if cap is None:
        cap = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, cap), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return out


def _border_strips(lam, size):
    """All (new partition, height) after removing a border strip of the given
    size spanning consecutive rows of lam."""
    lam = list(lam)
    k = len(lam)
    out = []
    for start in range(k):
        for end in range(start, k):
            new = list(lam)
            removed = 0
            for r in range(start, end):
                removed += lam[r] - (lam[r + 1] - 1)
                new[r] = lam[r + 1] - 1
            last = size - removed
            if last < 1 or last > lam[end]:
                continue
            new[end] = lam[end] - last
            if any(new[i] < new[i + 1] for i in range(k - 1)) or new[end] < 0:
                continue
            out.append((tuple(x for x in new if x > 0), end - start))
    return out


_MN_CACHE = {}


def mn_character(lam, mu):
    """Character value chi_lam on the class of cycle type mu."""
    lam = tuple(lam)
    mu = tuple(sorted(mu, reverse=True))
    if not lam and not mu:
        return 1
    key = (lam, mu)
    if key in _MN_CACHE:
        return _MN_CACHE[key]
    t = mu[0]
    rest = mu[1:]
    total = 0
    for new, height in _border_strips(lam, t):
        total += (-1) ** height * mn_character(new, rest)
    _MN_CACHE[key] = total
    return total


def partition_dim(lam):
    return mn_character(lam, (1,) * sum(lam))


# ---------------------------------------------------------------------------
# rational irreducible representations of the full symmetric group

def _perm_matrix_standard(w):
    """The (n-1)-dimensional standard representation in the basis
    e_i - e_{i+1}; integral entries."""
    n = len(w)
    cols = []
    for j in range(n - 1):
        a, b = w[j], w[j + 1]      # image of e_j - e_{j+1} is e_a - e_b
        coeffs = [0] * (n - 1)
        if a < b:
            for k in range(a, b):
                coeffs[k] = 1
        else:
            for k in range(b, a):
                coeffs[k] = -1
        cols.append(coeffs)
    rows = [[rf(cols[j][i]) for j in range(n - 1)] for i in range(n - 1)]
    return ExactMatrix(n - 1, 1, 1, rows)


_PAIRINGS4 = (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2)))


def _s4_on_pairings(w):
    """Permutation of the three pair-partitions of {1..4} induced by w."""
    out = []
    for pairing in _PAIRINGS4:
        moved = tuple(tuple(sorted((w[a], w[b]))) for a, b in pairing)
        moved = tuple(sorted(moved))
        out.append(_PAIRINGS4.index(moved))
    return tuple(out)


class StabIrrep:
    """Irreducible representation of a subgroup of Sym_n, given elementwise."""

    __slots__ = ("label", "dim", "images")

    def __init__(self, label, images):
        self.label = label
        self.images = images
        self.dim = next(iter(images.values())).nrows

    def __call__(self, w):
        return self.images[w]

    def verify(self):
        ids = list(self.images)
        for g in ids:
            for h in ids:
                gh = perm_compose(g, h)
                if not (self.images[g] * self.images[h] - self.images[gh]).is_zero():
                    return False
        return True


def _scalar_irrep(label, values):
    return StabIrrep(label, {g: ExactMatrix(1, 1, 1, [[rf(v)]])
                             for g, v in values.items()})


def symmetric_group_irreps(n, elements=None):
    """All irreducibles of the full Sym_n for n <= 4, as explicit rational (or
    cyclotomic) matrices computed elementwise."""
    if elements is None:
        elements = all_permutations(n)
    out = [_scalar_irrep("trivial", {g: 1 for g in elements})]
    if n >= 2:
        out.append(_scalar_irrep("sign", {g: perm_sign(g) for g in elements}))
    if n >= 3:
        std = {g: _perm_matrix_standard(g) for g in elements}
        out.append(StabIrrep("standard", std))
        out.append(StabIrrep("standard*sign",
                             {g: std[g].scale(perm_sign(g)) for g in elements}))
    if n == 4:
        two = {g: _perm_matrix_standard(_s4_on_pairings(g)) for g in elements}
        out.append(StabIrrep("pairing2d", two))
    return out


# ---------------------------------------------------------------------------
# subgroups and their irreducibles

def subgroup_closure(gens, n):
    elems = {perm_identity(n)}
    frontier = list(elems)
    gens = list(gens)
    while frontier:
        new = []
        for g in frontier:
            for h in gens:
                x = perm_compose(g, h)
                if x not in elems:
                    elems.add(x)
                    new.append(x)
        frontier = new
    return frozenset(elems)


def all_subgroups(n):
    """All subgroups of Sym_n (n <= 4: every subgroup is 2-generated)."""
    elements = all_permutations(n)
    found = set()
    for g in elements:
        found.add(subgroup_closure([g], n))
    for g in elements:
        for h in elements:
            found.add(subgroup_closure([g, h], n))
    return sorted(found, key=lambda H: (len(H), sorted(H)))


def subgroups_up_to_conjugacy(n):
    elements = all_permutations(n)
    reps = []
    seen = set()
    for H in all_subgroups(n):
        if H in seen:
            continue
        cls = set()
        for w in elements:
            wi = perm_inverse(w)
            cls.add(frozenset(perm_compose(perm_compose(w, h), wi) for h in H))
        seen |= cls
        reps.append(H)
    return reps


def is_abelian(H):
    H = list(H)
    return all(perm_compose(g, h) == perm_compose(h, g) for g in H for h in H)


def _element_order(g):
    n = len(g)
    e = perm_identity(n)
    p, k = g, 1
    while p != e:
        p = perm_compose(p, g)
        k += 1
    return k


def _one_dim_characters(H, n):
    """All 1-d characters of a subgroup, with values among the supported
    roots of unity; found by assigning root values to a generating set and
    propagating with consistency checks (characters of a nonabelian group
    factor through the abelianization automatically)."""
    from .scalar import zeta
    H = sorted(H)
    # greedy generating set
    gens = []
    span = subgroup_closure([], n)
    for g in H:
        if g not in span:
            gens.append(g)
            span = subgroup_closure(gens, n)
        if len(span) == len(H):
            break
    roots = {1: [Fraction(1)], 2: [Fraction(1), Fraction(-1)]}
    for m in (3, 4, 6):
        roots[m] = [zeta(m) ** k for k in range(m)]
    candidate_values = []
    for g in gens:
        o = _element_order(g)
        vals = []
        for m, rs in roots.items():
            if m > o:
                continue
            for v in rs:
                ok = v ** o == 1 if not isinstance(v, Fraction) else v ** o == 1
                if ok and v not in vals:
                    vals.append(v)
        candidate_values.append(vals)
    chars = []
    seen = set()

    def assign(idx, current):
        if idx == len(gens):
            # extend to all elements by word search
            table = {perm_identity(n): Fraction(1)}
            frontier = [perm_identity(n)]
            while frontier:
                new = []
                for g in frontier:
                    for gen, val in zip(gens, current):
                        x = perm_compose(g, gen)
                        v = table[g] * val
                        if x in table:
                            if table[x] != v:
                                return
                        else:
                            table[x] = v
                            new.append(x)
                frontier = new
            if len(table) != len(H):
                return
            key = tuple(sorted((g, str(v)) for g, v in table.items()))
            if key not in seen:
                seen.add(key)
                chars.append(table)
            return
        for v in candidate_values[idx]:
            assign(idx + 1, current + [v])

    assign(0, [])
    return chars


def commutator_subgroup(H, n):
    comms = []
    H = list(H)
    for g in H:
        for h in H:
            c = perm_compose(perm_compose(g, h),
                             perm_compose(perm_inverse(g), perm_inverse(h)))
            comms.append(c)
    return subgroup_closure(comms, n)


def irreps_of_subgroup(H, n):
    """Built-in irreducibles: complete for abelian subgroups and for the full
    symmetric group (n <= 4); all one-dimensionals for the remaining small
    subgroups (sufficient for the small-dimension classification)."""
    H = frozenset(H)
    full = frozenset(all_permutations(n))
    if H == full and 3 <= n <= 4:
        return symmetric_group_irreps(n, sorted(H))
    return [_scalar_irrep("char%d" % i, table)
            for i, table in enumerate(_one_dim_characters(H, n))]


# ---------------------------------------------------------------------------
# characters of the free-abelian subgroup

class Character:
    """Character of the rank-(n choose 2) free-abelian subgroup: a nonzero
    scalar value on each x_{ij}, i < j; the value on x_{ji} is the inverse."""

    __slots__ = ("n", "values")

    def __init__(self, n, values):
        self.n = n
        self.values = {}
        for (i, j), v in values.items():
            assert 1 <= i < j <= n
            v = rf(v) if not isinstance(v, RF) else v
            if v.is_zero():
                raise ValueError("character values must be nonzero")
            self.values[(i, j)] = v

    @classmethod
    def from_vector(cls, n, vec):
        """Values listed in the order x_12, x_13, .., x_1n, x_23, .., x_{n-1,n}."""
        pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
        assert len(vec) == len(pairs)
        return cls(n, dict(zip(pairs, vec)))

    def vector(self):
        pairs = [(i, j) for i in range(1, self.n + 1)
                 for j in range(i + 1, self.n + 1)]
        return [self.values[p] for p in pairs]

    def value(self, i, j):
        if i < j:
            return self.values[(i, j)]
        return self.values[(j, i)].inverse()

    def nonvanishing(self):
        """Constraints making every value invertible on the parameter variety."""
        polys = []
        for v in self.values.values():
            polys.append(v.num)
            polys.append(v.den)
        return NonVanishing(polys)

    def acted(self, w):
        """chi^w with chi^w(x_{ij}) = chi(x_{w^-1(i) w^-1(j)})."""
        wi = perm_inverse(w)
        out = {}
        for (i, j) in self.values:
            a, b = wi[i - 1] + 1, wi[j - 1] + 1
            out[(i, j)] = self.value(a, b)
        return Character(self.n, out)

    def __eq__(self, other):
        return self.n == other.n and self.values == other.values

    def __repr__(self):
        return "Character(%s)" % (["%s" % v for v in self.vector()],)


class StabilizerData:
    __slots__ = ("subgroup", "transversal")

    def __init__(self, subgroup, transversal):
        self.subgroup = subgroup
        self.transversal = transversal


def _transversal_key(t):
    moved = tuple(i for i in range(len(t)) if t[i] != i)
    return (len(moved), moved, t)


def orbit_and_stabilizer(chi, bound=6):
    """Stabilizer subgroup and a canonical coset transversal (representatives
    moving as few points as possible, smallest moved points first)."""
    n = chi.n
    if n > bound:
        raise ValueError("rank %d exceeds enumeration bound %d" % (n, bound))
    stab = []
    orbit_map = {}
    for w in all_permutations(n):
        if chi.acted(w) == chi:
            stab.append(w)
    stabset = frozenset(stab)
    cosets = {}
    for w in sorted(all_permutations(n), key=_transversal_key):
        key = frozenset(perm_compose(w, h) for h in stabset)
        if key not in cosets:
            cosets[key] = w
    transversal = sorted(cosets.values(), key=_transversal_key)
    assert len(transversal) * len(stabset) == _factorial(n)
    return StabilizerData(stabset, transversal)


def _factorial(n):
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


class InducedRep:
    """Induced representation: matrices for the x_{ij} and the adjacent
    transpositions, of dimension [Sym_n : H_chi] * dim tau."""

    __slots__ = ("n", "chi", "tau", "stab", "dim", "constraints", "_x", "_sigma")

    def __init__(self, n, chi, tau, stab, x_images, sigma_images):
        self.n = n
        self.chi = chi
        self.tau = tau
        self.stab = stab
        self.constraints = chi.nonvanishing()
        self._x = x_images
        self._sigma = sigma_images
        self.dim = next(iter(x_images.values())).nrows

    def x(self, i, j):
        if i < j:
            return self._x[(i, j)]
        return self._x[(j, i)].inverse(self.constraints)

    def sigma(self, i):
        return self._sigma[i]

    def perm(self, w):
        out = ExactMatrix.identity(self._sigma[1].N, self._sigma[1].rows_level)
        for i in perm_to_adjacent_word(w):
            out = out * self._sigma[i]
        return out

    def all_generators(self):
        gens = [self._x[k] for k in sorted(self._x)]
        gens += [self._sigma[i] for i in sorted(self._sigma)]
        return gens


def induce(chi, tau, stab=None):
    """Induce the character chi twisted by the stabilizer irrep tau up to the
    full semidirect product; verifies the defining relations of the group on
    the resulting matrices."""
    n = chi.n
    if stab is None:
        stab = orbit_and_stabilizer(chi)
    H = stab.subgroup
    T = stab.transversal
    dt = tau.dim
    dim = len(T) * dt
    # abelian generators: block diagonal
    x_images = {}
    for (i, j) in sorted(chi.values):
        M = ExactMatrix.zeros(dim, 1)
        for b, t in enumerate(T):
            ti = perm_inverse(t)
            a, bb = ti[i - 1] + 1, ti[j - 1] + 1
            val = chi.value(a, bb)
            for r in range(dt):
                M.rows[b * dt + r][b * dt + r] = val
        x_images[(i, j)] = M
    # symmetric-group generators: permuted blocks with tau cocycles
    sigma_images = {}
    for i in range(1, n):
        from .mdd import perm_adjacent
        g = perm_adjacent(n, i)
        M = ExactMatrix.zeros(dim, 1)
        for bj, tj in enumerate(T):
            gtj = perm_compose(g, tj)
            for bi, ti in enumerate(T):
                h = perm_compose(perm_inverse(ti), gtj)
                if h in H:
                    blk = tau(h)
                    for r in range(dt):
                        for c in range(dt):
                            e = blk.rows[r][c]
                            if not e.is_zero():
                                M.rows[bi * dt + r][bj * dt + c] = e
                    break
        sigma_images[i] = M
    rep = InducedRep(n, chi, tau, stab, x_images, sigma_images)
    _verify_induced(rep)
    return rep


def _verify_induced(rep):
    n = rep.n
    I = ExactMatrix.identity(rep.dim, 1)
    for i in range(1, n):
        Si = rep.sigma(i)
        assert (Si * Si - I).is_zero(), "sigma_%d not involutive" % i
    for i in range(1, n - 1):
        a, b = rep.sigma(i), rep.sigma(i + 1)
        assert (a * b * a - b * a * b).is_zero(), "braid fails at %d" % i
    for i in range(1, n):
        for j in range(i + 2, n):
            a, b = rep.sigma(i), rep.sigma(j)
            assert (a * b - b * a).is_zero()
    # conjugation: sigma_i x_{kl} sigma_i = x_{sigma_i(k) sigma_i(l)}
    from .mdd import perm_adjacent
    for i in range(1, n):
        g = perm_adjacent(n, i)
        Si = rep.sigma(i)
        for (k, l) in sorted(rep.chi.values):
            a, b = g[k - 1] + 1, g[l - 1] + 1
            lhs = Si * rep.x(k, l) * Si
            assert (lhs - rep.x(a, b)).is_zero(), "conjugation fails"
    # abelian part commutes
    keys = sorted(rep.chi.values)
    for p1 in keys:
        for p2 in keys:
            A, B = rep.x(*p1), rep.x(*p2)
            assert (A * B - B * A).is_zero()


def dimension_formula_holds(rep):
    return rep.dim == len(rep.stab.transversal) * rep.tau.dim


def is_irreducible(matrices, constraints=None):
    """True iff the commutant of the given generator images is 1-dimensional."""
    basis = commutant_basis(matrices, constraints)
    return len(basis) == 1


def restriction_character_multiset(rep):
    """Diagonal character data of the abelian restriction: for each block, the
    vector of values on x_12 < x_13 < ...; equals the orbit of chi with
    constant multiplicity."""
    out = []
    dt = rep.tau.dim
    nblocks = rep.dim // dt
    for b in range(nblocks):
        vec = []
        for key in sorted(rep.chi.values):
            vec.append(str(rep._x[key].rows[b * dt][b * dt]))
        out.extend([tuple(vec)] * dt)
    return sorted(out)


# ---------------------------------------------------------------------------
# classification of small-dimensional irreducibles

def _edge_orbits(H, n):
    """Orbits of H on undirected pairs, with a flag marking orbits where some
    element reverses an edge (forcing the value into {1,-1})."""
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    orbit_of = {}
    orbits = []
    for p in pairs:
        if p in orbit_of:
            continue
        idx = len(orbits)
        members = {}
        frontier = [(p, 1)]
        members[p] = 1
        flipped = False
        while frontier:
            (i, j), sign = frontier.pop()
            for w in H:
                a, b = w[i - 1] + 1, w[j - 1] + 1
                s2 = sign
                if a > b:
                    a, b = b, a
                    s2 = -sign
                if (a, b) in members:
                    if members[(a, b)] != s2:
                        flipped = True
                else:
                    members[(a, b)] = s2
                    frontier.append(((a, b), s2))
        for q in members:
            orbit_of[q] = idx
        orbits.append({"members": members, "flipped": flipped})
    return orbits, orbit_of


def _pattern_character(orbits, orbit_of, n, sign_choice, free_names):
    values = {}
    for (i, j), idx in orbit_of.items():
        orb = orbits[idx]
        sgn = orb["members"][(i, j)]
        if orb["flipped"]:
            v = rf(sign_choice[idx])
        else:
            base = param(free_names[idx])
            v = base if sgn == 1 else base.inverse()
        values[(i, j)] = v
    return Character(n, values)


def _exact_stabilizer_size(chi, n):
    return len([w for w in all_permutations(n) if chi.acted(w) == chi])


def classify_small_dims(n, d):
    """Families of d-dimensional irreducibles (d <= 3, n <= 4) organized by
    stabilizer type via the dimension formula.  Entries carry kind 'family'
    (free continuous parameters present) or 'isolated'; isolated entries that
    coincide with boundary points of a family are flagged."""
    if n > 4 or d > 3:
        raise ValueError("classification implemented for n <= 4, d <= 3")
    fact = _factorial(n)
    results = []
    for H in subgroups_up_to_conjugacy(n):
        index = fact // len(H)
        if index > d or d % index:
            continue
        dtau = d // index
        taus = [t for t in irreps_of_subgroup(H, n) if t.dim == dtau]
        if not taus:
            continue
        orbits, orbit_of = _edge_orbits(H, n)
        free = [i for i, o in enumerate(orbits) if not o["flipped"]]
        signed = [i for i, o in enumerate(orbits) if o["flipped"]]
        free_names = {i: "a%d" % k for k, i in enumerate(free)}
        # enumerate sign branches; keep those with stabilizer exactly H
        branches = []
        import itertools
        for combo in itertools.product((1, -1), repeat=len(signed)):
            sign_choice = dict(zip(signed, combo))
            chi = _pattern_character(orbits, orbit_of, n, sign_choice, free_names)
            if _exact_stabilizer_size(chi, n) == len(H):
                branches.append((sign_choice, chi))
        if not branches:
            continue
        for sign_choice, chi in branches:
            results.append({
                "dim": d,
                "stabilizer_order": len(H),
                "index": index,
                "free_params": len(free),
                "sign_choice": tuple(sign_choice[i] for i in sorted(sign_choice)),
                "tau_choices": len(taus),
                "tau_dims": sorted(t.dim for t in taus),
                "kind": "family" if free else "isolated",
                "chi_vector": [str(v) for v in chi.vector()],
            })
    has_family = any(r["kind"] == "family" for r in results)
    for r in results:
        r["boundary_of_family"] = (r["kind"] == "isolated" and has_family
                                   and r["index"] == 1)
    return results
