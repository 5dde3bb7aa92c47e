"""Acceptance gate: every pinned reference value and structural claim, one
test per criterion, in order. Each test prints its PASS/FAIL line so a -s or
failed run shows the full scoreboard.
"""

from cantor3.checks import run_check


def _run(name):
    res = run_check(name)
    print(res.line())
    assert res.ok, res.detail


def test_01_example_7():
    _run("example-7")


def test_02_example_19():
    _run("example-19")


def test_03_example_7_19():
    _run("example-7-19")


def test_04_example_43():
    _run("example-43")


def test_05_table_L_dims():
    _run("table-L-dims")


def test_06_family_N_phi():
    _run("family-N-phi")


def test_07_table_powers_of_2():
    _run("table-powers-of-2")


def test_08_L_pair_absorption():
    _run("L-pair-absorption")


def test_09_N_chain_vs_L():
    _run("N-chain-vs-L")


def test_10_Y_containment():
    _run("Y-containment")


def test_11_L_dim_bounds():
    _run("L-dim-bounds")


def test_12_oracle_agreement():
    _run("oracle-agreement")


def test_13_digit_criteria():
    _run("digit-criteria")


def test_14_pair_4_256_root():
    _run("pair-4-256-root")
