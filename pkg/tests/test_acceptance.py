"""Acceptance suite.

Each test covers one numbered acceptance criterion at its stated tolerance
(exact equality throughout; the two stated runtime bounds are asserted) and
prints one PASS line on success.  Run with ``pytest tests/test_acceptance.py -v``
(add ``-s`` to see the PASS lines).
"""

import time

import pytest

from regpart import cli
from regpart.counting import (
    count_range,
    pentagonal_delta1,
    triangular_delta3,
    verify_identity,
    verify_parity,
)
from regpart.maps import (
    glaisher_phi,
    glaisher_phi_inv,
    psi,
    psi_stats,
    sigma,
    sigma_inv,
)
from regpart.partition import (
    EllRegular,
    MaxMultiplicity,
    SetA,
    SetC,
    SetD,
    count_partitions_by_length_parity,
    enumerate_partitions,
    format_partition,
    satisfies,
)

EVEN_ELLS = (2, 4, 6, 8, 10, 12)
ODD_ELLS = (3, 5, 7, 9, 11)


def _ok(criterion, detail):
    print(f"ACCEPTANCE criterion {criterion}: PASS  ({detail})")


def _cli(capsys, *argv):
    code = cli.main(list(argv))
    out, _ = capsys.readouterr()
    return code, out


def test_criterion_01_worked_example_fidelity(capsys):
    started = time.perf_counter()

    # involution pairs, both directions, ell = 6 and ell = 8
    psi_cases = [
        (("trace", "--map", "psi", "--ell", "6", "--partition", "5,4,3^2,2^2,1"),
         "SplitCase\n(5,4,3^2,2^2,1) -> (5,3^2,2^4,1)\n"),
        (("trace", "--map", "psi", "--ell", "6", "--partition", "5,3^2,2^4,1"),
         "MergeCase\n(5,3^2,2^4,1) -> (5,4,3^2,2^2,1)\n"),
        (("trace", "--map", "psi", "--ell", "8", "--partition", "7,5,4^3,2^3,1"),
         "SplitCase\n(7,5,4^3,2^3,1) -> (7,5,4^2,2^5,1)\n"),
        (("trace", "--map", "psi", "--ell", "8", "--partition", "7,5,4^2,2^5,1"),
         "MergeCase\n(7,5,4^2,2^5,1) -> (7,5,4^3,2^3,1)\n"),
    ]
    # merge/split chains with every printed intermediate
    chain_cases = [
        (("trace", "--map", "sigma", "--ell", "6", "--partition", "9^2,7,5,3^3,1"),
         "(9^2,7,5,3^3,1) -> (18,7,6,5,3,1)\n"),
        (("trace", "--map", "sigma-inv", "--ell", "6", "--partition", "18,7,6,5,3,1"),
         "(18,7,6,5,3,1) -> (9^2,7,5,3^3,1)\n"),
        (("trace", "--map", "sigma", "--ell", "8", "--partition", "12^2,9,7,5,4^4,3"),
         "(12^2,9,7,5,4^4,3) -> (24,9,8^2,7,5,3) -> (24,16,9,7,5,3)\n"),
        (("trace", "--map", "sigma-inv", "--ell", "8", "--partition", "24,16,9,7,5,3"),
         "(24,16,9,7,5,3) -> (12^2,9,8^2,7,5,3) -> (12^2,9,7,5,4^4,3)\n"),
        (("trace", "--map", "glaisher", "--r", "2", "--partition", "9,6^2,3,2^2,1"),
         "(9,6^2,3,2^2,1) -> (3^3,2^8,1^4) -> (2^8,1^13)\n"),
        (("trace", "--map", "glaisher-inv", "--r", "2", "--partition", "2^8,1^13"),
         "(2^8,1^13) -> (6^2,3^4,2^2,1) -> (9,6^2,3,2^2,1)\n"),
    ]
    for argv, expected in psi_cases + chain_cases:
        code, out = _cli(capsys, *argv)
        assert code == 0, argv
        assert out == expected, argv

    # the complete 11-pair table for n = 10, ell = 3
    code, out = _cli(capsys, "pairs", "--ell", "3", "--n", "10")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[-1] == "pairs: 11, fixed points: 0"
    expected_pairs = {
        "(4,1^6) <-> (2^2,1^6)",
        "(4,2^2,1^2) <-> (2^4,1^2)",
        "(4^2,2) <-> (8,2)",
        "(5,2,1^3) <-> (5,1^5)",
        "(5,4,1) <-> (5,2^2,1)",
        "(7,2,1) <-> (7,1^3)",
        "(8,1^2) <-> (4^2,1^2)",
        "(10) <-> (5^2)",
        "(2,1^8) <-> (1^10)",
        "(2^3,1^4) <-> (4,2,1^4)",
        "(2^5) <-> (4,2^3)",
    }
    assert set(lines[:-1]) == expected_pairs
    assert len(lines) - 1 == 11

    elapsed = time.perf_counter() - started
    assert elapsed < 1.0, f"worked examples took {elapsed:.3f}s (limit 1s)"
    _ok(1, f"all worked examples byte-exact in {elapsed:.3f}s")


def test_criterion_02_theorem_one_even_case():
    started = time.perf_counter()
    for ell in EVEN_ELLS:
        report = verify_identity("t1", ell, 40)
        assert report.all_pass, f"t1 failed at ell={ell}: {report.failures[:3]}"
        assert len(report.rows) == 40
    elapsed = time.perf_counter() - started
    _ok(2, f"t1 exact for even ell in {EVEN_ELLS}, n <= 40, {elapsed:.1f}s")


def test_criterion_03_theorem_two_odd_case():
    for ell in ODD_ELLS:
        report = verify_identity("t2", ell, 40)
        assert report.all_pass, f"t2 failed at ell={ell}: {report.failures[:3]}"
    _ok(3, f"t2 exact for odd ell in {ODD_ELLS}, n <= 40")


def test_criterion_04_theorem_three_and_structural_chain():
    for r in (2, 4, 6, 8):
        report = verify_identity("t3", r, 40)
        assert report.all_pass, f"t3 failed at r={r}: {report.failures[:3]}"
        # structural chain: the signed bounded-multiplicity count equals the
        # signed (r+1)-regular count (the length-parity-preserving bijection)
        for n in range(1, 41):
            qe, qo = count_partitions_by_length_parity(n, MaxMultiplicity(r))
            be, bo = count_partitions_by_length_parity(n, EllRegular(r + 1))
            assert qe - qo == be - bo, (r, n)
    _ok(4, "t3 exact for even r in (2,4,6,8), n <= 40, including the signed chain")


def test_criterion_05_euler_and_hickerson_closed_forms():
    euler = verify_identity("euler", max_n=60)
    hicker = verify_identity("hickerson", max_n=60)
    assert euler.all_pass, euler.failures[:3]
    assert hicker.all_pass, hicker.failures[:3]
    # direct closed-form vs enumeration comparison, including n = 0
    assert count_range("delta", 60, r=1, method="enum") == \
        [pentagonal_delta1(n) for n in range(61)]
    assert count_range("delta", 60, r=3, method="enum") == \
        [triangular_delta3(n) for n in range(61)]
    _ok(5, "pentagonal and triangular closed forms match enumeration, n <= 60")


def test_criterion_06_involution_suite():
    started = time.perf_counter()
    checked = 0
    for ell in range(2, 13):
        even_ell = ell % 2 == 0
        fixed_family = SetA(ell) if even_ell else SetC(ell)
        regular = EllRegular(ell)
        for n in range(1, 41):
            for lam in enumerate_partitions(n, regular):
                e, t = psi_stats(lam, ell)
                if even_ell:
                    # fixed points are exactly the SetA members
                    assert satisfies(lam, fixed_family) == (e == 0 and t == 0), (ell, lam)
                if e == 0 and t == 0:
                    if not even_ell:
                        assert satisfies(lam, fixed_family), (ell, lam)
                    continue
                mu, _ = psi(lam, ell)
                assert mu.weight == lam.weight, (ell, lam)
                assert (mu.length - lam.length) % 2 == 1, (ell, lam)
                assert satisfies(mu, regular), (ell, lam)
                assert psi_stats(mu, ell) != (0, 0), (ell, lam)  # image stays in B'
                back, _ = psi(mu, ell)
                assert back == lam, (ell, lam)
                checked += 1
    elapsed = time.perf_counter() - started
    _ok(6, f"psi is a parity-flipping involution on {checked} domain elements, {elapsed:.1f}s")


def test_criterion_07_bijection_suites():
    started = time.perf_counter()
    # sigma: fixed-point family <-> distinct-residue family, even ell <= 12
    for ell in EVEN_ELLS:
        for n in range(0, 41):
            image = set()
            for lam in enumerate_partitions(n, SetA(ell)):
                mu, _ = sigma(lam, ell)
                assert satisfies(mu, SetD(ell)), (ell, lam)
                assert mu.weight == lam.weight
                back, _ = sigma_inv(mu, ell)
                assert back == lam, (ell, lam)
                assert mu not in image, (ell, lam)  # injectivity
                image.add(mu)
            targets = list(enumerate_partitions(n, SetD(ell)))
            assert image == set(targets), (ell, n)  # surjectivity
            for mu in targets:
                lam, _ = sigma_inv(mu, ell)
                assert satisfies(lam, SetA(ell)), (ell, mu)
                again, _ = sigma(lam, ell)
                assert again == mu, (ell, mu)
    # glaisher: bounded multiplicity <-> regular, r <= 6
    for r in range(1, 7):
        regular = EllRegular(r + 1)
        bounded = MaxMultiplicity(r)
        for n in range(0, 41):
            image = set()
            for lam in enumerate_partitions(n, bounded):
                mu, _ = glaisher_phi(lam, r)
                assert satisfies(mu, regular), (r, lam)
                assert mu.weight == lam.weight
                if r % 2 == 0:
                    assert (mu.length - lam.length) % 2 == 0, (r, lam)
                back, _ = glaisher_phi_inv(mu, r)
                assert back == lam, (r, lam)
                assert mu not in image, (r, lam)
                image.add(mu)
            targets = list(enumerate_partitions(n, regular))
            assert image == set(targets), (r, n)
    elapsed = time.perf_counter() - started
    _ok(7, f"sigma and glaisher verified as two-sided bijections, {elapsed:.1f}s")


def test_criterion_08_three_way_method_agreement():
    # series path timing, all statistics at order 60
    series_started = time.perf_counter()
    series_tables = {}
    for ell in range(2, 13):
        for stat in ("b", "be", "bo"):
            series_tables[(stat, ell)] = count_range(stat, 60, ell=ell, method="series")
        if ell % 2 == 0:
            series_tables[("d", ell)] = count_range("d", 60, ell=ell, method="series")
        else:
            series_tables[("c", ell)] = count_range("c", 60, ell=ell, method="series")
    for r in range(1, 11):
        for stat in ("qre", "qro", "delta"):
            series_tables[(stat, r)] = count_range(stat, 60, r=r, method="series")
    series_elapsed = time.perf_counter() - series_started
    assert series_elapsed < 5.0, f"series path took {series_elapsed:.2f}s (limit 5s)"

    # enumeration side: one exhaustive pass per family and n
    for ell in range(2, 13):
        for n in range(0, 61):
            even, odd = count_partitions_by_length_parity(n, EllRegular(ell))
            assert series_tables[("b", ell)][n] == even + odd, ("b", ell, n)
            assert series_tables[("be", ell)][n] == even, ("be", ell, n)
            assert series_tables[("bo", ell)][n] == odd, ("bo", ell, n)
        partner = ("d", SetD(ell)) if ell % 2 == 0 else ("c", SetC(ell))
        for n in range(0, 61):
            even, odd = count_partitions_by_length_parity(n, partner[1])
            assert series_tables[(partner[0], ell)][n] == even + odd, (partner[0], ell, n)
    for r in range(1, 11):
        for n in range(0, 61):
            even, odd = count_partitions_by_length_parity(n, MaxMultiplicity(r))
            assert series_tables[("qre", r)][n] == even, ("qre", r, n)
            assert series_tables[("qro", r)][n] == odd, ("qro", r, n)
            assert series_tables[("delta", r)][n] == even - odd, ("delta", r, n)

    # closed forms where they exist
    assert series_tables[("delta", 1)] == [pentagonal_delta1(n) for n in range(61)]
    assert series_tables[("delta", 3)] == [triangular_delta3(n) for n in range(61)]
    _ok(8, f"enumeration == series == closed forms, n <= 60 (series path {series_elapsed:.2f}s)")


def test_criterion_09_parity_corollary():
    for ell in range(2, 13):
        report = verify_parity(ell, 60)
        assert report.all_pass, f"parity failed at ell={ell}: {report.failures[:3]}"
    _ok(9, "regular counts match their distinct-family partners mod 2, ell <= 12, n <= 60")


def test_criterion_10_order_independence():
    started = time.perf_counter()
    strategies = ("largest", "smallest")

    def finals(map_fn, p, param):
        return {map_fn(p, param, strategy=s)[0] for s in strategies}

    for ell in EVEN_ELLS:
        for n in range(0, 31):
            for lam in enumerate_partitions(n, SetA(ell)):
                assert len(finals(sigma, lam, ell)) == 1, (ell, lam)
            for mu in enumerate_partitions(n, SetD(ell)):
                assert len(finals(sigma_inv, mu, ell)) == 1, (ell, mu)
    for r in range(1, 7):
        for n in range(0, 31):
            for lam in enumerate_partitions(n, MaxMultiplicity(r)):
                assert len(finals(glaisher_phi, lam, r)) == 1, (r, lam)
            for mu in enumerate_partitions(n, EllRegular(r + 1)):
                assert len(finals(glaisher_phi_inv, mu, r)) == 1, (r, mu)
    elapsed = time.perf_counter() - started
    _ok(10, f"largest-first and smallest-first schedules agree everywhere, {elapsed:.1f}s")
