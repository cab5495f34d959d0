"""Constructors for every classified matrix family: the involutive rank-2
braid transversal, the seven mixed-doubles cases (with subcases), the
point-symmetric Yang-Baxter family, and the equivalence transforms.

Every constructor re-verifies its defining relations symbolically on
construction (involutivity and the Yang-Baxter equation for single matrices,
the full mixed-doubles set at level 3 for pairs).
"""

from .matrix import ExactMatrix, RepPair, conjugate, embed_at, kron
from .presentations import MIXED_DOUBLES, passes
from .scalar import RF_ONE, NonVanishing, param, rf


class ConstraintViolation(Exception):
    pass


def _mat(rows):
    return ExactMatrix.from_rows(rows, N=2)


def _sym(x, name):
    return param(name) if x is None else rf(x)


def flip_matrix():
    return _mat([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]])


def antislash_matrix():
    return _mat([[0, 0, 0, 1], [0, 1, 0, 0], [0, 0, 1, 0], [1, 0, 0, 0]])


def is_involutive(M):
    return (M * M).is_identity()


def ybe_residual(M):
    """M1 M2 M1 - M2 M1 M2 at level 3."""
    M1 = embed_at(M, 1, 3)
    M2 = embed_at(M, 2, 3)
    return M1 * M2 * M1 - M2 * M1 * M2


def satisfies_ybe(M):
    return ybe_residual(M).is_zero()


# ---------------------------------------------------------------------------
# involutive rank-2 braid transversal

def make_involutive_braid(family, p=None, q=None, sign=1, check=True):
    """One of the five involutive braid families: trivial, f-glue, a-glue,
    fa-slash, anti-slash.  Unsupplied parameters stay symbolic."""
    if sign not in (1, -1):
        raise ConstraintViolation("sign must be +-1")
    if family == "trivial":
        M = ExactMatrix.identity(2, 2)
    elif family == "f-glue":
        pp, qq = _sym(p, "p"), _sym(q, "q")
        M = _mat([[1, -pp, pp, pp * qq],
                  [0, 0, 1, qq],
                  [0, 1, 0, -qq],
                  [0, 0, 0, 1]])
    elif family == "a-glue":
        pp = _sym(p, "p")
        M = _mat([[1, 0, 0, pp],
                  [0, 0, 1, 0],
                  [0, 1, 0, 0],
                  [0, 0, 0, -1]])
    elif family == "fa-slash":
        qq = _sym(q, "q")
        if qq.is_zero():
            raise ConstraintViolation("fa-slash needs q != 0")
        M = _mat([[1, 0, 0, 0],
                  [0, 0, qq, 0],
                  [0, qq.inverse(), 0, 0],
                  [0, 0, 0, sign]])
    elif family == "anti-slash":
        M = antislash_matrix()
    else:
        raise ConstraintViolation("unknown involutive braid family %r" % (family,))
    if check:
        assert is_involutive(M), family
        assert satisfies_ybe(M), family
    return M


def known_coincidences():
    """Points where the transversal varieties overlap (reported, never
    canonicalized away)."""
    flip = flip_matrix()
    out = []
    if make_involutive_braid("f-glue", 0, 0) == flip:
        out.append(("f-glue", {"p": 0, "q": 0}, "flip"))
    if make_involutive_braid("fa-slash", q=1, sign=1) == flip:
        out.append(("fa-slash", {"q": 1, "sign": 1}, "flip"))
    return out


# ---------------------------------------------------------------------------
# point-symmetric Yang-Baxter family (P/A/N/N' basis)

def _manji_basis(sign):
    s = sign
    P = _mat([[1, 0, 0, 0], [0, 0, s, 0], [0, s, 0, 0], [0, 0, 0, 1]])
    A = _mat([[0, 0, 0, s], [0, 1, 0, 0], [0, 0, 1, 0], [s, 0, 0, 0]])
    Nn = _mat([[0, 0, 1, 0], [s, 0, 0, 0], [0, 0, 0, s], [0, 1, 0, 0]])
    Np = _mat([[0, 1, 0, 0], [0, 0, 0, s], [s, 0, 0, 0], [0, 0, 1, 0]])
    return P, A, Nn, Np


def make_manji(kind, sign=1, a=None, b=None, c=None, d=None):
    """The basis matrices P, A, N, N' (kind in {"P","A","N","N'"}) or their
    combination R = a P + d A + c N + b N' (kind "R")."""
    if sign not in (1, -1):
        raise ConstraintViolation("sign must be +-1")
    P, A, Nn, Np = _manji_basis(sign)
    if kind == "P":
        return P
    if kind == "A":
        return A
    if kind == "N":
        return Nn
    if kind == "N'":
        return Np
    if kind == "R":
        aa, bb = _sym(a, "a"), _sym(b, "b")
        cc, dd = _sym(c, "c"), _sym(d, "d")
        return P.scale(aa) + A.scale(dd) + Nn.scale(cc) + Np.scale(bb)
    raise ConstraintViolation("unknown kind %r" % (kind,))


# ---------------------------------------------------------------------------
# the classified pairs

def _aglue(g):
    return _mat([[1, 0, 0, g], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, -1]])


def _fglue_diag(g):
    # the f-glue shape with equal glue parameter: first row (1, g, -g, -g^2)
    return _mat([[1, g, -g, -(g * g)], [0, 0, 1, g], [0, 1, 0, -g], [0, 0, 0, 1]])


def _slash(g, corner):
    return _mat([[1, 0, 0, 0], [0, 0, g, 0], [0, g.inverse(), 0, 0],
                 [0, 0, 0, corner]])


def _conic_point_a(eps, t):
    # x^2 = z^2 + eps*z through (z, x) = (0, 0): z = eps/(t^2-1), x = t*z
    den = t * t - 1
    z = rf(eps) / den
    return z, t * z


def _conic_point_b(eps, t):
    # 2r^2 - 2y^2 + 2 eps y - 1 = 0 through (y, r) = (eps/2, 1/2)
    u = rf(1) / (t * t - 1)
    return rf(eps) / 2 + t * u, rf(1) / 2 + u  # (y, r)


def _conic_point_c(eps, t):
    # r^2 - y^2 + eps*r = 0 through (r, y) = (0, 0)
    den = t * t - 1
    r = rf(eps) / den
    return r, t * r  # (r, y)


def _case6a_S(eps, z, x):
    w = -eps - z
    return _mat([[z, -x, x, w],
                 [x, w, z, -x],
                 [-x, z, w, x],
                 [w, x, -x, z]])


def _case6b_S(eps, y, r):
    u = eps - y
    return _mat([[r, u, y, -r],
                 [y, -r, r, u],
                 [u, r, -r, y],
                 [-r, y, u, r]])


def _case6c_S(eps, r, y):
    w = -r - eps
    return _mat([[-r, y, y, w],
                 [-y, r + eps, r, -y],
                 [-y, r, r + eps, -y],
                 [w, y, y, -r]])


def _check_conic(value_lhs, value_rhs, label):
    if not (value_lhs - value_rhs).is_zero():
        raise ConstraintViolation("conic constraint not satisfied for %s" % label)


def make_md_pair(case, check=True, **kw):
    """Construct the (R, S) pair of a classification case or subcase.

    Cases: case1, case2, case3, case3-wangian, case4, case4-glue, case5,
    case5-antidiag, case6a, case6b, case6c, case7-flip, case7-antislash,
    case7-aslash, case7-fglue.  Sign choices are explicit keyword arguments;
    unsupplied continuous parameters stay symbolic.  Construction re-verifies
    the mixed-doubles relations at level 3.
    """
    sign = kw.get("sign", 1)
    eps = kw.get("eps", 1)
    if sign not in (1, -1) or eps not in (1, -1):
        raise ConstraintViolation("sign choices must be +-1")
    nv = NonVanishing()
    params = []

    def grab(name, default_symbol=None):
        val = kw.get(name)
        sym = default_symbol or name
        if val is None:
            params.append(sym)
            return param(sym)
        return rf(val)

    if case == "case1":
        R = ExactMatrix.identity(2, 2)
        S = R.scale(sign)
    elif case == "case2":
        p, q = grab("p"), grab("q")
        if p.is_zero():
            raise ConstraintViolation("case2 needs p != 0")
        R, S = _aglue(p), _aglue(q).scale(sign)
        nv = NonVanishing([p])
    elif case == "case3-wangian":
        p, q = grab("p"), grab("q")
        R = _mat([[1, -p, p, p * q], [0, 0, 1, q], [0, 1, 0, -q], [0, 0, 0, 1]])
        S = R.scale(sign)
        nv = NonVanishing([q])
    elif case == "case3":
        q, s = grab("q"), grab("s")
        if q.is_zero():
            raise ConstraintViolation("case3 needs q != 0")
        R, S = _fglue_diag(q), _fglue_diag(s).scale(sign)
        nv = NonVanishing([q])
    elif case == "case4":
        p, s = grab("p"), grab("s")
        if p.is_zero() or s.is_zero():
            raise ConstraintViolation("case4 needs p, s != 0")
        R = _mat([[1, 0, 0, 0], [0, 0, p, 0], [0, p.inverse(), 0, 0],
                  [0, 0, 0, -1]])
        S = _slash(s, rf(sign))
        nv = NonVanishing([p, s])
    elif case == "case4-glue":
        pm = kw.get("p", 1)
        if pm not in (1, -1):
            raise ConstraintViolation("case4-glue needs p = +-1")
        s = grab("s")
        R = _mat([[1, 0, 0, 0], [0, 0, pm, 0], [0, pm, 0, 0], [0, 0, 0, -1]])
        # the middle sign of S is forced to equal p by the relations
        S = _mat([[1, 0, 0, s], [0, 0, pm, 0], [0, pm, 0, 0], [0, 0, 0, -1]])
    elif case == "case5":
        p, s = grab("p"), grab("s")
        if p.is_zero() or s.is_zero():
            raise ConstraintViolation("case5 needs p, s != 0")
        R = _slash(p, RF_ONE)
        S = _slash(s, rf(sign))
        nv = NonVanishing([p, s])
    elif case == "case5-antidiag":
        s = grab("s")
        if s.is_zero():
            raise ConstraintViolation("case5-antidiag needs s != 0")
        R = _slash(rf(-1), RF_ONE)
        S = _mat([[0, 0, 0, s], [0, sign, 0, 0], [0, 0, sign, 0],
                  [s.inverse(), 0, 0, 0]])
        nv = NonVanishing([s])
    elif case in ("case6a", "case6b", "case6c"):
        R = antislash_matrix()
        if "t" in kw or not set(kw) & {"z", "x", "y", "r"}:
            t = grab("t")
            nv = NonVanishing([t, t - 1, t + 1])
            if case == "case6a":
                z, x = _conic_point_a(eps, t)
                S = _case6a_S(eps, z, x)
            elif case == "case6b":
                y, r = _conic_point_b(eps, t)
                S = _case6b_S(eps, y, r)
            else:
                r, y = _conic_point_c(eps, t)
                S = _case6c_S(eps, r, y)
        else:
            if case == "case6a":
                z, x = rf(kw["z"]), rf(kw["x"])
                _check_conic(x * x, z * z + z * eps, "case6a")
                S = _case6a_S(eps, z, x)
            elif case == "case6b":
                y, r = rf(kw["y"]), rf(kw["r"])
                _check_conic(r * r * 2 - y * y * 2 + y * (2 * eps), rf(1), "case6b")
                S = _case6b_S(eps, y, r)
            else:
                r, y = rf(kw["r"]), rf(kw["y"])
                _check_conic(r * r + r * eps, y * y, "case6c")
                S = _case6c_S(eps, r, y)
    elif case == "case7-flip":
        R = flip_matrix()
        S = flip_matrix().scale(sign)
    elif case == "case7-antislash":
        R = flip_matrix()
        S = antislash_matrix().scale(sign)
    elif case == "case7-aslash":
        s = grab("s")
        if s.is_zero():
            raise ConstraintViolation("case7-aslash needs s != 0")
        R = flip_matrix()
        S = _mat([[1, 0, 0, 0], [0, 0, s, 0], [0, s.inverse(), 0, 0],
                  [0, 0, 0, -1]]).scale(sign)
        nv = NonVanishing([s])
    elif case == "case7-fglue":
        s = grab("s")
        R = flip_matrix()
        S = _fglue_diag(s).scale(sign)
    else:
        raise ConstraintViolation("unknown case %r" % (case,))

    pair = RepPair(R, S, params=params, constraints=nv, provenance=case)
    if check and not passes(pair, MIXED_DOUBLES, 3):
        raise ConstraintViolation("constructed pair fails relations: %s" % case)
    return pair


ALL_CASES = (
    ("case1", {"sign": 1}), ("case1", {"sign": -1}),
    ("case2", {}),
    ("case3-wangian", {"sign": 1}), ("case3-wangian", {"sign": -1}),
    ("case3", {}),
    ("case4", {"sign": 1}), ("case4", {"sign": -1}),
    ("case4-glue", {"p": 1}), ("case4-glue", {"p": -1}),
    ("case5", {"sign": 1}), ("case5", {"sign": -1}),
    ("case5-antidiag", {"sign": 1}), ("case5-antidiag", {"sign": -1}),
    ("case6a", {"eps": 1}), ("case6a", {"eps": -1}),
    ("case6b", {"eps": 1}), ("case6b", {"eps": -1}),
    ("case6c", {"eps": 1}), ("case6c", {"eps": -1}),
    ("case7-flip", {"sign": 1}), ("case7-flip", {"sign": -1}),
    ("case7-antislash", {"sign": 1}),
    ("case7-aslash", {"sign": 1}), ("case7-aslash", {"sign": -1}),
    ("case7-fglue", {"sign": 1}),
)


def iter_all_cases(check=True):
    for case, kw in ALL_CASES:
        yield case, kw, make_md_pair(case, check=check, **kw)


# analysis-oriented aliases (parameter roles as used in the structure results)
def analysis_pair(family, **kw):
    """Families as analysed for all n: 'a-glue' has R with glue q and S with
    glue p; 'f-glue' is the equal-shape pair (R(q), S(p)); 'antislash' is the
    eps=-1 case6a pair."""
    if family == "a-glue":
        p, q = rf(kw.get("p", "p")), rf(kw.get("q", "q"))
        return RepPair(_aglue(q), _aglue(p), params=("p", "q"),
                       constraints=NonVanishing([]), provenance="a-glue")
    if family == "f-glue":
        p, q = rf(kw.get("p", "p")), rf(kw.get("q", "q"))
        return RepPair(_fglue_diag(q), _fglue_diag(p), params=("p", "q"),
                       constraints=NonVanishing([]), provenance="f-glue")
    if family == "antislash":
        if "t" in kw:
            return make_md_pair("case6a", eps=-1, t=kw["t"])
        return make_md_pair("case6a", eps=-1, z=kw["z"], x=kw["x"])
    raise ConstraintViolation("unknown analysis family %r" % (family,))


# ---------------------------------------------------------------------------
# transforms

class Transform:
    """An invertible symmetry of pairs: local_conj(A), transpose, global_sign,
    swap_rs, antidiagonal, nonlocal_conj(U)."""

    def __init__(self, kind, matrix=None):
        self.kind = kind
        self.matrix = matrix

    def inverse(self):
        if self.kind in ("transpose", "global_sign", "swap_rs", "antidiagonal"):
            return self
        if self.kind == "local_conj":
            return Transform("local_conj", self.matrix.inverse())
        if self.kind == "nonlocal_conj":
            return Transform("nonlocal_conj", self.matrix.inverse())
        raise ValueError("unknown transform %r" % (self.kind,))


def apply_transform(t, pair):
    R, S = pair.R, pair.S
    if t.kind == "swap_rs":
        R, S = S, R
    elif t.kind == "transpose":
        R, S = R.transpose(), S.transpose()
    elif t.kind == "global_sign":
        R, S = R.scale(-1), S.scale(-1)
    elif t.kind == "local_conj":
        A = t.matrix
        U = kron(A, A)
        Ui = U.inverse()
        R, S = U * R * Ui, U * S * Ui
    elif t.kind == "nonlocal_conj":
        U = t.matrix
        Ui = U.inverse()
        R, S = U * R * Ui, U * S * Ui
    elif t.kind == "antidiagonal":
        J = kron(_mat2([[0, 1], [1, 0]]), _mat2([[0, 1], [1, 0]]))
        R = J * R.transpose() * J
        S = J * S.transpose() * J
    else:
        raise ValueError("unknown transform %r" % (t.kind,))
    return RepPair(R, S, params=pair.params, constraints=pair.constraints,
                   provenance=pair.provenance + "+" + t.kind)


def _mat2(rows):
    return ExactMatrix.from_rows(rows, N=2)


def check_ds_equivalence(A, pair):
    """True iff A (x) A commutes with both R and S; if so, also return the
    derived pair ((A (x) I) R (A (x) I)^-1, ...)."""
    AA = kron(A, A)
    if not ((AA * pair.R - pair.R * AA).is_zero()
            and (AA * pair.S - pair.S * AA).is_zero()):
        return False, None
    from .scalar import BranchAmbiguity
    try:
        AI = kron(A, ExactMatrix.identity(2, 1))
        AIi = AI.inverse(pair.constraints)
    except (BranchAmbiguity, ZeroDivisionError):
        # commutation holds but invertibility of A is not certified on the
        # declared variety; no derived pair emitted
        return True, None
    derived = RepPair(AI * pair.R * AIi, AI * pair.S * AIi,
                      params=pair.params, constraints=pair.constraints,
                      provenance=pair.provenance + "+ds")
    return True, derived


def braid_pair_from_fslash(lam):
    """The (flip, slash(lam)) pair conjugate to the eps=-1 anti-slash pair."""
    lam = rf(lam)
    Rp = flip_matrix()
    Sp = _slash(lam, RF_ONE)
    return Rp, Sp


def w_conjugation_data(lam=None):
    """The conjugation between the (flip, slash(lam)) pair and the eps=-1
    anti-slash pair at z = -(lam^2-2lam+1)/(4lam), x = (lam^2-1)/(4lam)."""
    lam = param("lam") if lam is None else rf(lam)
    W = kron(_mat2([[1, 1], [1, -1]]), _mat2([[1, -1], [1, 1]]))
    z = -(lam * lam - 2 * lam + 1) / (4 * lam)
    x = (lam * lam - 1) / (4 * lam)
    Rp, Sp = braid_pair_from_fslash(lam)
    R = antislash_matrix()
    S = _case6a_S(-1, z, x)
    return {"W": W, "Rp": Rp, "Sp": Sp, "R": R, "S": S, "z": z, "x": x,
            "lam": lam}


def w_conjugation_check(lam=None):
    """True iff W Rp W^-1 = R and W Sp W^-1 = S hold symbolically."""
    d = w_conjugation_data(lam)
    nv = NonVanishing(["lam"]) if lam is None else None
    Wi = d["W"].inverse(nv)
    ok_r = (d["W"] * d["Rp"] * Wi - d["R"]).is_zero()
    ok_s = (d["W"] * d["Sp"] * Wi - d["S"]).is_zero()
    # the substituted point satisfies the eps=-1 conic x^2 = z^2 - z
    z, x = d["z"], d["x"]
    ok_conic = (x * x - z * z + z).is_zero()
    return ok_r and ok_s and ok_conic
