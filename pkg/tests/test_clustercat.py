import pytest
from hypothesis import given, settings, strategies as st

from rigidlab import clustercat as cc
from rigidlab.exact import make_rng
from rigidlab.repcat import kronecker_standard, random_rep
from rigidlab.roots import Quiver, coxeter_transform, kronecker_sequences

M = lambda j, m=3: cc.Transjective(m, j)


def test_objects_validate():
    with pytest.raises(ValueError):
        cc.Transjective(1, 0)
    with pytest.raises(ValueError):
        cc.GenericModule(3, (1, 0))  # a real root, not regular
    with pytest.raises(ValueError):
        cc.GenericModule(3, (0, 0))
    assert cc.ShiftedProj(3, 2) == M(-1)
    assert cc.ShiftedProj(3, 1) == M(-2)
    with pytest.raises(ValueError):
        cc.ShiftedProj(3, 3)


def test_module_object_recognizes_transjectives():
    assert cc.module_object(kronecker_standard(3, "P", 2)) == M(2)
    assert cc.module_object(kronecker_standard(3, "I", 1)) == M(-4)
    X = random_rep(Quiver.kronecker(3), (1, 1), 10, make_rng(2))
    assert isinstance(cc.module_object(X), cc.ModuleObj)


def test_shift_examples():
    assert cc.shift(M(0), 1) == M(-2)
    assert cc.shift(M(-1), -1) == M(1)
    assert cc.shift(M(3), 0) == M(3)
    # the class of P(2)[1] shifts to I(2), the class of I(1) back to P(1)[1]
    assert cc.class_shift(3, ("sp", 2), 1) == ("mod", (0, 1))
    assert cc.class_shift(3, ("mod", (1, 3)), -1) == ("sp", 1)
    assert cc.shift(cc.GenericModule(3, (1, 1)), 1).dims == (2, 5)


@pytest.mark.parametrize("m", [2, 3, 6])
def test_shift_agrees_with_classes(m):
    for j in range(-8, 9):
        for k in (-2, -1, 1, 2):
            assert cc.object_class(cc.shift(M(j, m), k)) == cc.class_shift(m, cc.object_class(M(j, m)), k)


def test_hom_examples():
    P, _ = kronecker_sequences(3, 9)
    assert [cc.cluster_hom_dim(M(0), M(k)) for k in range(6)] == [P[k][0] for k in range(6)]
    assert cc.cluster_hom_dim(M(1), M(0)) == 0
    assert cc.cluster_hom_dim(M(0), M(1)) == 3
    assert cc.cluster_hom_dim(M(-1), M(0)) == 3
    assert cc.cluster_hom_dim(M(0), M(-1)) == 0
    assert cc.cluster_hom_dim(M(0), M(-4)) == 1
    # additivity over sums
    assert cc.cluster_hom_dim(cc.ClusterObject(((M(0), 2),)), [M(1), M(2)]) == 2 * (3 + 8)
    with pytest.raises(ValueError):
        cc.cluster_hom_dim(M(0), M(0, 6))


def test_regular_object_homs():
    R = cc.GenericModule(3, (1, 1))
    assert cc.cluster_hom_dim(R, R) == 9
    assert cc.cluster_hom_dim(R, R, 1) == 4
    assert not cc.is_2_rigid(R)


@pytest.mark.parametrize("m", [2, 3])
def test_hom_matches_stalk_complexes(m):
    # the orbit formula against explicit derived Hom between stalks
    for a in range(-3, 4):
        for b in range(-3, 4):
            A, B = M(a, m), M(b, m)
            assert cc.cluster_hom_dim(A, B) == cc.stalk_hom_dim(cc.stalk_of(A), cc.stalk_of(B)), (a, b)


def test_is_2_rigid_examples():
    for j in range(-5, 6):
        assert cc.is_2_rigid(M(j))
        assert cc.is_2_rigid([M(j), M(j + 1)])
        assert not cc.is_2_rigid([M(j), M(j + 2)])
    assert cc.is_2_rigid([])
    assert not cc.is_2_rigid(cc.ClusterObject(((cc.GenericModule(3, (2, 2)), 1),)))


def test_tilting_set_validation():
    assert cc.chamber(3, 0).names() == ["M0", "M1"]
    with pytest.raises(ValueError):
        cc.TiltingSet.of(M(0), M(2))
    with pytest.raises(ValueError):
        cc.TiltingSet((M(0), M(0)))
    with pytest.raises(ValueError):
        cc.TiltingSet.of(M(0), M(1, 6))


def test_window_examples():
    assert cc.window_objects(3, 0) == []
    objs = cc.window_objects(3, 1, module_bound=2)
    assert [A.name for A in objs] == ["M-1", "M0", "M1", "R1,1", "R1,2", "R2,1", "R2,2"]
    assert [A.name for A in cc.window_objects(2, 1, 10)] == ["M-1", "M0", "M1", "R1,1"]


def test_cluster_tilting_examples():
    assert cc.is_cluster_tilting_window(cc.chamber(3, 0), 6)
    assert not cc.is_cluster_tilting_window([M(0)], 6)
    assert not cc.is_cluster_tilting_window([M(0), M(2)], 6)
    with pytest.raises(ValueError):
        cc.is_cluster_tilting_window([M(0)], 0)


def test_complements_examples():
    assert cc.names(cc.complements([M(1)], 6, 3)) == ["M0", "M2"]
    assert cc.names(cc.complements([M(-2)], 6, 3)) == ["M-3", "M-1"]
    assert cc.complements(cc.chamber(3, 0), 6) == []
    # a single object never fills a rank two cluster tilting set
    assert cc.complements([], 1, 3, module_bound=2) == []
    with pytest.raises(ValueError):
        cc.complements([M(0), M(2)], 6)


def test_mutate_examples():
    C0 = cc.chamber(3, 0)
    assert cc.mutate(C0, M(0), 6).names() == ["M1", "M2"]
    assert cc.mutate(C0, M(1), 6).names() == ["M-1", "M0"]
    with pytest.raises(ValueError):
        cc.mutate(C0, M(3), 6)
    with pytest.raises(cc.WindowTooSmallError):
        cc.mutate(cc.chamber(3, 5), M(5), 6)


def test_mutate_rejects_a_non_tilting_set():
    with pytest.raises(ValueError, match="not cluster tilting"):
        cc.mutate(cc.TiltingSet.of(M(0)), M(0), 6)


def test_functor_F_examples():
    C0 = cc.chamber(3, 0)
    assert cc.functor_F(C0, M(2)) == (8, 3)
    assert cc.functor_F(C0, M(0)) == (1, 0)
    assert cc.functor_F(C0, M(-3)) == (0, 1)
    # the shift of M_0 is M_{-2} = P(1)[1], which F kills
    assert cc.functor_F(C0, M(-2)) == (0, 0)
    assert cc.functor_F(C0, cc.shift(M(0), -1)) == (8, 3)
    with pytest.raises(ValueError):
        cc.functor_F([M(0), M(2)], M(1))


@pytest.mark.parametrize("i", [-2, 0, 1, 3])
def test_F_kills_exactly_the_shift_of_T(i):
    T = cc.chamber(3, i)
    for A in cc.window_objects(3, 6, module_bound=4):
        assert (cc.functor_F(T, A) == (0, 0)) == cc.in_shifted(T, A), A.name


def test_torsion_decomposition_examples():
    C0 = cc.chamber(3, 0)
    assert cc.torsion_decomposition_check(M(2), C0) == ((1, 0), (0, 3))
    assert cc.torsion_decomposition_check(M(0), C0) == ((0, 0), (1, 0))
    with pytest.raises(cc.ExcludedObject):
        cc.torsion_decomposition_check(M(-2), C0)


@pytest.mark.parametrize("m", [2, 3, 6])
def test_ar_quadrangle(m):
    C0 = cc.chamber(m, 0)
    B1, B0 = cc.ar_quadrangle(C0, M(0, m), window=4, module_bound=6)
    assert B1 == {M(1, m): m} and B0 == {}
    B1, B0 = cc.ar_quadrangle(C0, M(1, m), window=4, module_bound=6)
    assert B1 == {} and B0 == {M(0, m): m}


def test_two_cy_symmetry_on_small_window():
    bad, count = cc.two_cy_symmetry(cc.window_objects(3, 4, module_bound=3))
    assert bad == []
    assert count > 50


@pytest.mark.parametrize("T", [cc.chamber(3, 1), cc.chamber(3, 0), cc.chamber(2, 0)])
def test_equivalence_window_passes(T):
    rep = cc.verify_equivalence_window(T, 4, module_bound=5)
    assert rep.status == "pass", rep.counterexamples


def test_equivalence_window_catches_an_injected_fault():
    # pretend M2 has a self-extension; the rigidity check must notice
    def hom(A, B, k):
        if A == B == M(2) and k == 1:
            return 1
        return cc._indec_hom(A, B, k)

    rep = cc.verify_equivalence_window(cc.chamber(3, 1), 4, module_bound=3, hom=hom)
    assert rep.status == "fail"
    failing = [c for c in rep.checks if not c["ok"]]
    assert any(c["name"] == "rigidity" and c["inputs"]["A"] == "M2" for c in failing)


def test_generic_rigidity_examples():
    assert cc.generic_rigidity(3, (8, 3)) == (True, "realized")
    assert cc.generic_rigidity(3, (2, 2)) == (False, "euler")
    # the generic module at (2, 0) is P(1) twice, which is rigid but not a brick
    assert cc.generic_rigidity(3, (2, 0))[0] is True


# ---------------------------------------------------------------- properties

@settings(max_examples=60, deadline=None)
@given(st.sampled_from([2, 3, 6]), st.integers(-30, 30), st.integers(-5, 5))
def test_shift_is_bijective(m, j, k):
    A = M(j, m)
    assert cc.shift(cc.shift(A, k), -k) == A
    assert cc.shift(cc.shift(A, 1), k) == cc.shift(A, k + 1)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([2, 3, 6]), st.integers(-8, 8), st.integers(-8, 8), st.integers(-2, 2))
def test_hom_is_shift_invariant(m, a, b, k):
    A, B = M(a, m), M(b, m)
    assert cc.cluster_hom_dim(A, B) == cc.cluster_hom_dim(cc.shift(A, k), cc.shift(B, k))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([2, 3, 6]), st.integers(-8, 8), st.integers(-8, 8))
def test_two_calabi_yau_on_transjectives(m, a, b):
    A, B = M(a, m), M(b, m)
    assert cc.cluster_hom_dim(A, B, 1) == cc.cluster_hom_dim(B, A, 1)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([2, 3, 6]), st.integers(-6, 6), st.integers(-6, 6))
def test_serre_relation_for_F(m, i, j):
    T = cc.chamber(m, i)
    A = M(j, m)
    if cc.in_shifted(T, A):
        return
    expected = (0, 0) if A in T else coxeter_transform(Quiver.kronecker(m), cc.functor_F(T, A), "forward")
    assert cc.functor_F(T, cc.shift(A, 1)) == expected
