"""One test per acceptance criterion, evaluated over every calculus and
both braidings.  Each test prints a single PASS/FAIL line with the failing
(calculus, sign) pairs and their witnesses."""

import pytest

from qhodge import checks

CRITERIA = {
    1: "braid equation",
    2: "spectral identities and kernel dimensions",
    3: "antisymmetrizer eigenvalues, ranks and A^(4) = 0",
    4: "ker A^(2) equals the span of S(Q)",
    5: "volume forms and g(theta, theta)",
    6: "Hodge tables and the q -> -q twins",
    7: "bridge identities between the two braidings",
    8: "symmetry classification",
    9: "duality and calculus axioms",
    10: "sphere projectability, Hodge operator and Laplacian",
    11: "numeric cross-check at rational points",
}


@pytest.fixture(scope="module")
def reports():
    return checks.verify_all(list(range(1, 8)), [1, -1], threads=1)


@pytest.mark.parametrize("criterion", sorted(CRITERIA))
def test_criterion(criterion, reports, capsys):
    results = [(r.calculus, r.sign, c) for r in reports for c in r.checks if c.criterion == criterion]
    assert results, f"criterion {criterion} produced no results"
    failed = [(cid, sign, c) for cid, sign, c in results if c.status == "fail"]
    skipped = sum(c.status == "skip" for _, _, c in results)
    verdict = "FAIL" if failed else "PASS"
    where = ", ".join(f"{cid}{'+' if sign > 0 else '-'}" for cid, sign, _ in failed)
    line = f"criterion {criterion:>2}: {verdict}  {CRITERIA[criterion]}  ({len(results) - len(failed) - skipped} pass, {len(failed)} fail, {skipped} skip)"
    if failed:
        line += f"  failing: {where}"
    with capsys.disabled():
        print(f"\n{line}")
    assert not failed, "\n".join(f"calculus {cid} sign {sign:+d}: {c.witness}" for cid, sign, c in failed)
