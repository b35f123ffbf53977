import math
import numpy as np
import pytest
from hardy_devkit import characters
from hardy_devkit.characters import Character
from hardy_devkit.errors import InsufficientCharacterLength
from hardy_devkit.generators import generate_polynomial
from hardy_devkit.series import DirichletPolynomial, evaluate

F = DirichletPolynomial([1.0, -0.5j, 0.25, 0.3 + 0.3j, 0.0, -0.1])
CHI = characters.sample_haar(3, 20200101)


def test_sample_haar():
    assert characters.sample_haar(5, 7) == characters.sample_haar(5, 7)
    assert characters.sample_haar(5, 7) != characters.sample_haar(5, 8)
    chi = characters.sample_haar(5, 7)
    assert chi.J == 5
    assert chi.seed == 7
    assert np.all((chi.phases >= 0) & (chi.phases < 2 * math.pi))
    assert np.allclose(np.abs(chi.values_at_primes()), 1, rtol=0, atol=1e-15)

    # a longer draw extends a shorter one
    assert np.array_equal(characters.sample_haar(8, 7).phases[:5], chi.phases)

    with pytest.raises(ValueError):
        characters.sample_haar(0, 7)


def test_haar_moments():
    th = characters.haar_phase_block(99, 1, 0, 10 ** 5)
    assert th.shape == (10 ** 5, 1)
    m = np.mean(np.exp(1j * th[:, 0]))
    assert abs(m) <= 4 / math.sqrt(10 ** 5)
    assert np.mean(np.abs(np.exp(1j * th[:, 0])) ** 2) == pytest.approx(1.0, abs=1e-12)


def test_haar_moments_over_seeds():
    # E chi(m) conj(chi(n)) = [m == n], composite n included
    ns = [2, 4, 6, 12, 15, 30]
    seeds = 10 ** 4
    vals = np.array([characters.char_values(characters.sample_haar(3, s), ns) for s in range(seeds)])
    band = 4 / math.sqrt(seeds)
    for (i, m) in enumerate(ns):
        assert abs(np.mean(vals[:, i])) <= band, m
        for j in range(i + 1, len(ns)):
            assert abs(np.mean(vals[:, i] * np.conj(vals[:, j]))) <= band, (m, ns[j])


def test_char_eval():
    assert characters.char_eval(CHI, 1) == 1
    assert characters.char_eval(Character.trivial(4), 210) == 1
    chi = Character([math.pi / 2])
    assert abs(characters.char_eval(chi, 4) - (-1)) < 1e-15
    assert abs(characters.char_eval(chi, 2) - 1j) < 1e-15

    # completely multiplicative
    for (m, n) in ((2, 3), (4, 5), (12, 10), (6, 6)):
        lhs = characters.char_eval(CHI, m * n)
        rhs = characters.char_eval(CHI, m) * characters.char_eval(CHI, n)
        assert abs(lhs - rhs) < 1e-14

    with pytest.raises(InsufficientCharacterLength):
        characters.char_eval(Character([0.0]), 3)

    with pytest.raises(ValueError):
        characters.char_eval(Character([0.0]), 3)


def test_char_values():
    ns = [1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 60]
    vals = characters.char_values(CHI, ns)
    for (n, v) in zip(ns, vals):
        assert abs(v - characters.char_eval(CHI, n)) < 1e-14

    with pytest.raises(InsufficientCharacterLength):
        characters.char_values(CHI, [1, 7])


def test_kronecker_twist():
    assert characters.kronecker_twist(CHI, 0) is CHI
    tw = characters.kronecker_twist(CHI, 1.7)
    lhs = characters.char_eval(tw, 60)
    rhs = characters.char_eval(CHI, 60) * 60 ** (-1.7j)
    assert abs(lhs - rhs) < 1e-12

    # twists compose
    twice = characters.kronecker_twist(characters.kronecker_twist(CHI, 0.4), 1.3)
    assert abs(characters.char_eval(twice, 60) - lhs) < 1e-12

    with pytest.raises(ValueError):
        characters.kronecker_twist(CHI, math.nan)


def test_vertical_limit():
    assert characters.vertical_limit(F, Character.trivial(3)) == F
    g = characters.vertical_limit(F, CHI)
    assert np.allclose(np.abs(g.coeffs), np.abs(F.coeffs), rtol=0, atol=1e-15)
    assert g.coefficient(6) == pytest.approx(F.coefficient(6) * characters.char_eval(CHI, 6), abs=1e-15)

    with pytest.raises(InsufficientCharacterLength):
        characters.vertical_limit(DirichletPolynomial.monomial(7), CHI)


def test_boundary_eval():
    assert characters.boundary_eval(F, Character.trivial(3)) == pytest.approx(complex(np.sum(F.coeffs)), abs=1e-15)
    assert characters.boundary_eval(DirichletPolynomial([1.0]), CHI) == 1

    # f*(chi p^-i tau) is f_chi(i tau)
    g = characters.vertical_limit(F, CHI)
    for tau in (-3.0, 0.5, 12.25):
        tw = characters.kronecker_twist(CHI, tau)
        assert abs(characters.boundary_eval(F, tw) - evaluate(g, complex(0, tau))) < 1e-13


def test_flow_values():
    taus = np.array([-5.0, 0.0, 0.3, 40.0])
    vals = characters.flow_values(F, CHI, taus)
    for (tau, v) in zip(taus, vals):
        expect = characters.boundary_eval(F, characters.kronecker_twist(CHI, float(tau)))
        assert abs(v - expect) < 1e-12


def test_character_value():
    chi = Character([2 * math.pi + 1.0, -0.5])
    assert chi.phases[0] == pytest.approx(1.0, abs=1e-15)
    assert chi.phases[1] == pytest.approx(2 * math.pi - 0.5, abs=1e-15)
    assert chi.covers(6)
    assert not chi.covers(5)
    assert hash(chi) == hash(Character(chi.phases))

    with pytest.raises(ValueError):
        Character([])

    with pytest.raises(ValueError):
        Character([math.inf])


def test_character_codec():
    raw = CHI.encode()
    back = Character.decode(raw)
    assert back == CHI
    assert back.seed == 20200101
    assert Character.decode({"J": 1, "phases": [0.5], "seed": None}).J == 1

    with pytest.raises(ValueError):
        Character.from_dict({"J": 2, "phases": [0.5], "seed": None})


def test_boundary_eval_long_character():
    f = generate_polynomial({"tag": "random-gaussian", "n_max": 10 ** 5, "decay": 0.6}, 8)
    chi = characters.sample_haar(9592, 5)
    g = characters.vertical_limit(f, chi)
    for n in (1, 2, 360, 9973, 65536, 99991, 10 ** 5):
        assert abs(g.coefficient(n) - f.coefficient(n) * characters.char_eval(chi, n)) < 1e-12

    b = characters.boundary_eval(f, chi)
    assert abs(b - complex(np.sum(g.coeffs))) < 1e-9

    with pytest.raises(InsufficientCharacterLength):
        characters.boundary_eval(f, characters.sample_haar(9591, 5))
