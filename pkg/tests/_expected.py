"""Expected diagram data per the involution tables, shared across test modules.

The conjugating matrices are the literal ones from the construction, so for
tau'_1 and sigma_{l-1} (family D) the realized diagram is the theta-composed
picture of the corresponding table row; the unordered pair of diagrams per
row is exactly as tabulated.
"""

from so2m.liealg import build_context


def expected_vogan(inv):
    """Return (swapped vertex pairs, circled vertex set) for a catalog entry."""
    m, l, p = inv.m, build_context(inv.m).l, inv.param
    if m == 2:
        return {
            "sigma_1": (set(), {"phi_1", "-phi_1"}),
            "eta_1": ({("phi_1", "-phi_1")}, set()),
            "eta_2": ({("phi_2", "-phi_2")}, set()),
            "mu_1": ({("phi_1", "-phi_1"), ("phi_2", "-phi_2")}, set()),
            "tau'_1": ({("phi_1", "phi_2"), ("-phi_1", "-phi_2")}, set()),
            "tau_1": ({("phi_1", "-phi_2"), ("phi_2", "-phi_1")}, set()),
        }[inv.name]
    black_swap = {("phi_1", "-delta")}
    tail_swap = {(f"phi_{l-1}", f"phi_{l}")}
    if inv.kind == "sigma":
        return set(), {f"phi_{p}"}
    if inv.kind == "tau":
        return black_swap, ({f"phi_{p}"} if p >= 2 else set())
    if inv.kind == "mu":
        return black_swap | tail_swap, ({f"phi_{p}"} if p >= 2 else set())
    if inv.kind == "tau'":
        circles = {f"phi_{p}"} if p >= 2 else {"phi_1", "-delta"}
        return tail_swap, circles
    if inv.kind == "sigma_J" and p == l:
        return set(), {"phi_1", f"phi_{l}"}
    if inv.kind == "sigma_J" and p == l - 1:
        return set(), {"-delta", f"phi_{l-1}"}
    if inv.kind == "sigma_0":
        return set(), {"phi_1", "phi_2", "phi_3", "-delta"}
    if inv.kind == "sigma'_0":
        return black_swap, {"phi_2", "phi_3"}
    raise AssertionError(inv.name)
