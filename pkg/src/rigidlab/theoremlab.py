"""End-to-end verification campaigns producing ``Report`` objects.

Campaigns
    kronecker3-rigid   rigid objects for the Kronecker quiver of degree 3
                       and its cluster category (constants, classification,
                       rigid pattern, mutation, complements, the functor F)
    kronecker6-rigid   the degree 6 case: classification and the single
                       orbit model in which only multiples of one object are rigid
    kac-rigid          rigid representations sit exactly at real Schur roots
    euler-identity     dim Hom - dim Ext^1 equals the Euler form on random pairs
    weyl-forms         closed Weyl-word forms agree with the recurrences

Failures are reported, never raised; each failing check keeps the inputs
needed to replay it.
"""

from dataclasses import dataclass, field
from itertools import product

from . import clustercat as cc
from .exact import make_rng
from .report import Report, Timer, check
from .repcat import (GenericityError, generic_rigid_rep, hom_dim, hom_ext_dims,
                     is_rigid, is_schur_root, iso_check, kronecker_standard, random_rep,
                     rigid_indec_classify)
from .roots import (Quiver, coxeter_transform, euler_form, kronecker_sequences,
                    kronecker_weyl_forms, positive_real_roots, tits_form)

# dim Hom(S_1, S_2) in the stable category for the degree 3 Veronese ring,
# spanned by multiplication with x, y, z
DEGREE3_CROSS_HOM = 3
# dim Ext^4(S_1, S_1) for the degree 6 Veronese ring
DEGREE6_CONSTANT = 6


def expected_rigid_vectors(m, bound):
    """Preprojective and preinjective dimension vectors with entries <= bound."""
    count = 2
    while True:
        P, I = kronecker_sequences(m, count)
        # both sequences grow, so once the last terms exceed the bound we are done
        if min(P[-1]) > bound and min(I[-1]) > bound:
            break
        count += 1
    return sorted(d for d in P + I if max(d) <= bound)


# ---------------------------------------------------------------- degree 3

def _hom_constants(m, hom):
    M0, M1 = cc.Transjective(m, 0), cc.Transjective(m, 1)
    got = {"End(M0)": hom(M0, M0, 0), "End(M1)": hom(M1, M1, 0),
           "Hom(M1,M0)": hom(M1, M0, 0), "Hom(M0,M1)": hom(M0, M1, 0)}
    expected = {"End(M0)": 1, "End(M1)": 1, "Hom(M1,M0)": 0, "Hom(M0,M1)": m}
    return check("hom-constants", {"m": m}, expected, got)


def _rigid_modules(m, bound, trials, seed):
    got = rigid_indec_classify(m, bound, trials=trials, seed=seed)
    return check("rigid-modules", {"m": m, "bound": bound, "trials": trials},
                 expected_rigid_vectors(m, bound), got)


def _rigid_pattern(m, window, module_bound, hom):
    """2-rigid window indecomposables are the M_j; {M_j, M_k} is 2-rigid iff |j - k| = 1."""
    checks = []
    objs = cc.window_objects(m, window, module_bound)
    rigid = [A.name for A in objs if cc.is_2_rigid([A], hom)]
    expected = [f"M{j}" for j in range(-window, window + 1)]
    checks.append(check("rigid-pattern", {"m": m, "window": window, "part": "indecomposables"},
                        expected, rigid))
    wrong = []
    for j in range(-window, window + 1):
        for k in range(j + 1, window + 1):
            pair = [cc.Transjective(m, j), cc.Transjective(m, k)]
            if cc.is_2_rigid(pair, hom) != (k == j + 1):
                wrong.append([j, k])
    checks.append(check("rigid-pattern", {"m": m, "window": window, "part": "pairs"},
                        [], wrong))
    return checks


def _mutation_chain(m, reach, window, module_bound, hom):
    checks = []
    for i in range(-reach, reach + 1):
        C = cc.chamber(m, i)
        Mi, Mi1 = cc.Transjective(m, i), cc.Transjective(m, i + 1)
        inputs = {"m": m, "i": i, "window": window}
        try:
            up = cc.mutate(C, Mi, window, module_bound, hom)
            down = cc.mutate(C, Mi1, window, module_bound, hom)
            back = cc.mutate(up, cc.Transjective(m, i + 2), window, module_bound, hom)
        except (ValueError, RuntimeError) as exc:
            checks.append(check("mutation-chain", inputs, "mutations succeed", str(exc), ok=False))
            continue
        checks.append(check("mutation-chain", dict(inputs, at=Mi.name),
                            cc.chamber(m, i + 1).names(), up.names()))
        checks.append(check("mutation-chain", dict(inputs, at=Mi1.name),
                            cc.chamber(m, i - 1).names(), down.names()))
        checks.append(check("mutation-chain", dict(inputs, at=Mi.name, twice=True),
                            C.names(), back.names()))
    return checks


def _two_complements(m, reach, window, module_bound, hom):
    checks = []
    for i in range(-reach, reach + 1):
        D = [cc.Transjective(m, i + 1)]
        got = cc.names(cc.complements(D, window, m, module_bound, hom))
        checks.append(check("two-complements", {"m": m, "i": i, "window": window},
                            [f"M{i}", f"M{i + 2}"], got))
    return checks


def _exchange_quadrangles(m, window, module_bound):
    C0 = cc.chamber(m, 0)
    M0, M1 = cc.Transjective(m, 0), cc.Transjective(m, 1)
    checks = []
    for X, exp in ((M1, ({}, {"M0": m})), (M0, ({"M1": m}, {}))):
        try:
            B1, B0 = cc.ar_quadrangle(C0, X, window, module_bound)
            got = ({k.name: v for k, v in B1.items()}, {k.name: v for k, v in B0.items()})
        except (ValueError, RuntimeError) as exc:
            got = str(exc)
        checks.append(check("ar-quadrangle", {"m": m, "T": C0.names(), "X": X.name},
                            list(exp), list(got) if isinstance(got, tuple) else got))
    try:
        got = [list(v) for v in cc.torsion_decomposition_check(cc.Transjective(m, 2), C0)]
    except (ValueError, RuntimeError) as exc:
        got = str(exc)
    checks.append(check("torsion-decomposition", {"m": m, "T": C0.names(), "A": "M2"},
                        [[1, 0], [0, m]], got))
    return checks


def _symmetry(m, window, module_bound):
    bad, count = cc.two_cy_symmetry(cc.window_objects(m, window, module_bound))
    return check("two-cy-symmetry", {"m": m, "window": window, "pairs": count}, [], bad)


def verify_degree3_classification(bound=40, window=6, seed=0, trials=8,
                                  module_bound=cc.DEFAULT_MODULE_BOUND, hom=None):
    """Rigid modules over K_3 and rigid objects of its cluster category.

    ``hom(A, B, k)`` overrides cluster Hom dimensions for fault injection.
    """
    m = 3
    h = hom or cc._indec_hom
    checks = []
    with Timer() as timer:
        checks.append(_hom_constants(m, h))
        checks.append(check("hom-constants", {"m": m, "pair": "Hom(M0,M1)"},
                            DEGREE3_CROSS_HOM, h(cc.Transjective(m, 0), cc.Transjective(m, 1), 0)))
        checks.append(_rigid_modules(m, bound, trials, seed))
        checks.extend(_rigid_pattern(m, window, module_bound, hom))
        # C_{i+1} contains M_{i+2}, so the chain up to |i| = window - 1 needs one more index
        checks.extend(_mutation_chain(m, window - 1, window + 1, module_bound, hom))
        checks.extend(_two_complements(m, window - 2, window, module_bound, hom))
        if window >= 2:
            checks.extend(_exchange_quadrangles(m, window, module_bound))
        checks.append(_symmetry(m, window, module_bound))
        for T, w in ((cc.chamber(m, 1), window), (cc.chamber(m, 0), window - 1)):
            rep = cc.verify_equivalence_window(T, w, trials, seed, module_bound, hom)
            for c in rep.checks:
                c["inputs"]["T"] = T.names()
                c["inputs"]["window"] = w
                c["name"] = "equivalence-window:" + c["name"]
            checks.extend(rep.checks)
    return Report.from_checks("kronecker3-rigid", checks, seed, timer.ms)


# ---------------------------------------------------------------- degree 6

def single_orbit_image(m, p):
    """Module assigned to X[p] for the cluster tilting object X with F(X) = P_1.

    X[p] goes to P_{1-p} for p <= 1 and to I_{p-3} for p >= 3; X[2] is the
    object killed by F. Returns ('P', i), ('I', i) or None.
    """
    if p <= 1:
        return ("P", 1 - p)
    if p == 2:
        return None
    return ("I", p - 3)


def _image_dims(m, img):
    which, i = img
    P, I = kronecker_sequences(m, max(i + 1, 2))
    return (P if which == "P" else I)[i]


def orbit_hom(m, k):
    """dim T(X, X[k]) in the 3-Calabi-Yau single orbit model.

    T(X, X[-j]) is Hom(P_1, P_{1+j}) for j >= 0, the first and second
    shifts vanish because X is cluster tilting, and Serre duality gives
    T(X, X[k]) = T(X, X[3-k]).
    """
    if k in (1, 2):
        return 0
    if k >= 3:
        k = 3 - k
    j = -k
    P, _ = kronecker_sequences(m, max(j + 2, 2))
    return P[j + 1][1]


def verify_degree6_classification(bound=40, seed=0, trials=8, orbit_range=8):
    """Rigid modules over K_6 and the single orbit model behind them."""
    m = 6
    Q = Quiver.kronecker(m)
    checks = []
    with Timer() as timer:
        P1 = kronecker_standard(m, "P", 1)
        P0 = kronecker_standard(m, "P", 0)
        checks.append(check("degree-constant", {"m": m, "pair": "Hom(P0,P1)"},
                            DEGREE6_CONSTANT, hom_dim(P0, P1)))
        checks.append(check("degree-constant", {"m": m, "k": -1}, DEGREE6_CONSTANT,
                            orbit_hom(m, -1)))
        checks.append(_rigid_modules(m, bound, trials, seed))
        # the assignment is compatible with F(T[2]) = tau F(T) and the recurrence
        positions = [p for p in range(-orbit_range, orbit_range + 3) if p != 2]
        for p in positions:
            img, nxt = single_orbit_image(m, p), single_orbit_image(m, p + 2)
            if img is None or nxt is None:
                continue
            d, e = _image_dims(m, img), _image_dims(m, nxt)
            if img == ("P", 0):
                continue
            checks.append(check("orbit-assignment", {"p": p, "image": list(img)},
                                e, coxeter_transform(Q, d, "forward")))
        for p in range(-orbit_range, 0):
            a, b, c = (_image_dims(m, single_orbit_image(m, p + s)) for s in (1, 0, -1))
            checks.append(check("orbit-recurrence", {"p": p}, c,
                                tuple(m * y - x for x, y in zip(a, b))))
        # module-level values behind orbit_hom: Hom(P_1, P_{1+j})
        for j in range(0, 3):
            X = kronecker_standard(m, "P", 1)
            Y = kronecker_standard(m, "P", 1 + j)
            checks.append(check("orbit-hom", {"k": -j}, orbit_hom(m, -j), hom_dim(X, Y)))
        # single orbit rigidity: X[p] + X[q] is rigid only for p = q
        mixed = []
        for p in positions:
            for q in positions:
                k = q - p
                if k <= 0:
                    continue
                if orbit_hom(m, k + 1) + orbit_hom(m, 1 - k) == 0:
                    mixed.append([p, q])
        checks.append(check("single-orbit-rigidity", {"positions": [positions[0], positions[-1]]},
                            [], mixed))
        # recorded module-level Ext^1 between assigned images
        pairs = [(("P", 1), ("I", 1)), (("I", 1), ("P", 1)), (("P", 0), ("P", 1)),
                 (("P", 1), ("P", 0))]
        for a, b in pairs:
            X, Y = kronecker_standard(m, *a), kronecker_standard(m, *b)
            hom, ext = hom_ext_dims(X, Y)
            checks.append(check("module-ext-table", {"X": list(a), "Y": list(b), "ext1": ext},
                                euler_form(Q, X.dims, Y.dims), hom - ext))
    return Report.from_checks("kronecker6-rigid", checks, seed, timer.ms)


# ---------------------------------------------------------------- Kac

def kac_rigid_check(Q, bound, trials=8, seed=0, claim="kac-rigid"):
    """Rigid representations appear exactly at real Schur roots, uniquely."""
    checks = []
    with Timer() as timer:
        real = set(positive_real_roots(Q, bound))
        schur_real = []
        for d in product(range(bound + 1), repeat=Q.vertex_count):
            if sum(d) == 0:
                continue
            q = tits_form(Q, d)
            inputs = {"quiver": Q.to_json(), "d": d, "seed": seed}
            if q <= 0:
                rng = make_rng(("kac-sample", seed, Q.arrows, d))
                rigid = [i for i in range(trials) if is_rigid(random_rep(Q, d, 10, rng))]
                if rigid:
                    checks.append(check("no-rigid-at-imaginary", inputs, [], rigid))
                continue
            schur = is_schur_root(Q, d, trials=trials, rng=make_rng(("kac-schur", seed, d)))
            if q > 1:
                if schur:
                    checks.append(check("no-brick-above-one", inputs, False, schur))
                continue
            if not schur:
                continue
            schur_real.append(d)
            try:
                X = generic_rigid_rep(Q, d, trials, rng=make_rng(("kac-a", seed, d)))
                Y = generic_rigid_rep(Q, d, trials, rng=make_rng(("kac-b", seed, d)))
                same = iso_check(X, Y, rng=make_rng(("kac-iso", seed, d)))
            except GenericityError as exc:
                checks.append(check("unique-rigid", inputs, "rigid brick", str(exc), ok=False))
                continue
            checks.append(check("unique-rigid", inputs, True, same))
        checks.append(check("real-schur-roots", {"quiver": Q.to_json(), "bound": bound},
                            sorted(real), sorted(schur_real)))
    return Report.from_checks(claim, checks, seed, timer.ms)


# ---------------------------------------------------------------- identities

TEST_QUIVERS = {"K2": Quiver.kronecker(2), "K3": Quiver.kronecker(3), "K6": Quiver.kronecker(6),
                "A2": Quiver.linear(2), "A3": Quiver.linear(3)}


def euler_identity_check(pairs=100, max_dim=4, seed=0):
    """dim Hom - dim Ext^1 = <d, e> on seeded random pairs for each test quiver."""
    checks = []
    with Timer() as timer:
        for name, Q in TEST_QUIVERS.items():
            rng = make_rng(("euler", seed, name))
            bad = []
            for t in range(pairs):
                d = tuple(rng.randint(0, max_dim) for _ in Q.vertices)
                e = tuple(rng.randint(0, max_dim) for _ in Q.vertices)
                X, Y = random_rep(Q, d, 5, rng), random_rep(Q, e, 5, rng)
                hom = hom_dim(X, Y, route="intertwiner")
                _, ext = hom_ext_dims(X, Y, route="presentation")
                if hom - ext != euler_form(Q, d, e):
                    bad.append({"trial": t, "d": d, "e": e, "hom": hom, "ext1": ext})
            checks.append(check("euler-identity", {"quiver": name, "pairs": pairs}, [], bad))
    return Report.from_checks("euler-identity", checks, seed, timer.ms)


def weyl_forms_check(top=8, degrees=(2, 3, 6), seed=0):
    """Closed Weyl-word forms equal the recurrence outputs."""
    checks = []
    with Timer() as timer:
        for m in degrees:
            P, I = kronecker_sequences(m, 2 * top + 2)
            for i in range(top + 1):
                expected = (P[2 * i], P[2 * i + 1], I[2 * i], I[2 * i + 1])
                checks.append(check("weyl-forms", {"m": m, "i": i}, list(expected),
                                    list(kronecker_weyl_forms(m, i))))
    return Report.from_checks("weyl-forms", checks, seed, timer.ms)


# ---------------------------------------------------------------- runner

ALL_CAMPAIGNS = ("kronecker3-rigid", "kronecker6-rigid", "kac-rigid", "euler-identity",
                 "weyl-forms")


@dataclass
class RunConfig:
    campaigns: tuple = ALL_CAMPAIGNS
    seed: int = 0
    bound: int = 40
    window: int = 6
    trials: int = 8
    kac_bound: int = 8
    module_bound: int = cc.DEFAULT_MODULE_BOUND
    kac_quivers: dict = field(default_factory=lambda: {
        "K2": (Quiver.kronecker(2), 8), "K3": (Quiver.kronecker(3), 8),
        "K6": (Quiver.kronecker(6), 8), "A2": (Quiver.linear(2), 3),
        "A3": (Quiver.linear(3), 3), "A1": (Quiver(1, ()), 2)})


def run_campaign(name, config):
    if name == "kronecker3-rigid":
        return [verify_degree3_classification(config.bound, config.window, config.seed,
                                              config.trials, config.module_bound)]
    if name == "kronecker6-rigid":
        return [verify_degree6_classification(config.bound, config.seed, config.trials)]
    if name == "kac-rigid":
        out = []
        for label, (Q, bound) in sorted(config.kac_quivers.items()):
            bound = min(bound, config.kac_bound)
            out.append(kac_rigid_check(Q, bound, config.trials, config.seed,
                                       claim=f"kac-rigid:{label}"))
        return out
    if name == "euler-identity":
        return [euler_identity_check(seed=config.seed)]
    if name == "weyl-forms":
        return [weyl_forms_check(seed=config.seed)]
    raise ValueError(f"unknown campaign {name!r}")


def run_all(config=None):
    """Run the configured campaigns; reports come back sorted by claim id."""
    if config is None:
        config = RunConfig()
    reports = []
    for name in config.campaigns:
        reports.extend(run_campaign(name, config))
    return sorted(reports, key=lambda r: r.claim)


def all_passed(reports):
    return all(r.passed for r in reports)
