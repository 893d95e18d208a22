"""Smoke tests of the python bindings; exits 77 when the module is absent so
the test harness records a skip instead of a failure."""

import sys

try:
    import chevrep
except ImportError as exc:
    print(f"chevrep module not importable ({exc}); skipping")
    sys.exit(77)


def test_closed_forms():
    assert chevrep.d_of("A1") == 0
    assert chevrep.d_of("G2") == 2
    assert chevrep.d_of("E8") == 28
    assert chevrep.f_of("C3") == 2
    assert chevrep.f_of("B3") == 1
    assert chevrep.h_f("A1", 7, 1) == 3
    assert chevrep.h_f("C2", 3, 2) == 27
    assert chevrep.h_f("G2", 5, 1) == 100
    assert chevrep.h_f("E8", 3, 1) == 2 * 3**28
    assert chevrep.h_f("E8", 9, 3) == (9**3 - 9**2) * 9 ** (3 * 28)
    assert chevrep.orbit_count("A2", 3, 1) == 2
    assert chevrep.irrep_dim("D4", 3, 2) == 3**8


def test_root_system_info():
    info = chevrep.root_system_info("G2")
    assert info["num_roots"] == 12
    assert info["d"] == 2
    assert info["f"] == 1
    assert chevrep.root_system_info("E8")["num_positive"] == 120


def test_certificate():
    cert = chevrep.certificate("A2", 3, 1)
    assert cert["bound"] == 6
    assert cert["orbit_count"] == 2
    assert cert["irrep_dim"] == 3
    assert cert["orbit_count"] * cert["irrep_dim"] == chevrep.h_f("A2", 3, 1)


def test_heis_info():
    info = chevrep.heis_info("C2", 3, 1)
    assert info["order"] == 27
    assert info["d"] == 1
    assert info["generic_units"]


def test_errors():
    for bad in (("G2", 3, 1), ("A1", 4, 1)):
        try:
            chevrep.h_f(*bad)
        except ValueError:
            pass
        else:
            raise AssertionError(f"h_f{bad} should have raised")


def test_cli_passthrough():
    assert chevrep.run_cli(["bound", "--phi", "A1", "--q", "7", "--n", "1"]) == 0
    assert chevrep.run_cli(["bound", "--phi", "G2", "--q", "3", "--n", "1"]) == 2


if __name__ == "__main__":
    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
                print(f"[ok] {name}")
            except Exception as exc:  # noqa: BLE001 - report and count
                failures += 1
                print(f"[FAIL] {name}: {exc}")
    sys.exit(1 if failures else 0)
