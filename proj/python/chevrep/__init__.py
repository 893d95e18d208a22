"""Exact lower bounds for faithful representations of Chevalley groups over
finite local rings, with the arbitrary-precision values returned as ints."""

import json

from . import _core

__all__ = [
    "d_of",
    "f_of",
    "h_f",
    "orbit_count",
    "irrep_dim",
    "root_system_info",
    "certificate",
    "heis_info",
    "run_cli",
]

d_of = _core.d_of
f_of = _core.f_of
root_system_info = _core.root_system_info
run_cli = _core.run_cli


def h_f(phi: str, q: int, n: int) -> int:
    """h_f(Phi, q, n) = orbit_count * q**(n*d), exact."""
    return int(_core.h_f_str(phi, q, n))


def orbit_count(phi: str, q: int, n: int) -> int:
    return int(_core.orbit_count_str(phi, q, n))


def irrep_dim(phi: str, q: int, n: int) -> int:
    return int(_core.irrep_dim_str(phi, q, n))


def certificate(phi: str, q: int, n: int) -> dict:
    """Bound certificate with int-valued big fields."""
    raw = json.loads(_core.certificate_json(phi, q, n))
    for key in ("irrep_dim", "orbit_count", "bound"):
        raw[key] = int(raw[key])
    return raw


def heis_info(phi: str, q: int, n: int, kind: str = "auto") -> dict:
    info = dict(_core.heis_info(phi, q, n, kind))
    info["order"] = int(info["order"])
    return info
