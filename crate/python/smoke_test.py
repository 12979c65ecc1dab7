"""Smoke test for the edgemu extension module.

Build and install first, e.g.
    pip install maturin && maturin develop --release -m crates/python/Cargo.toml
"""

import edgemu

c4 = edgemu.Graph.family("cycle:4")
assert (c4.n, c4.m) == (4, 4)
assert edgemu.chromatic_index(c4) == 2

result = edgemu.mu_all(c4)
s = result["summary"]
assert (s["mu11"], s["mu12"], s["mu21"], s["mu22"]) == (1, 4, 3, 4), s
assert [(r["t"], r["mu1"], r["mu2"]) for r in result["table"]["rows"]] == [(2, 4, 4), (3, 2, 4), (4, 1, 3)]

value, witness = edgemu.mu2(c4, 4)
assert value == 3 and edgemu.f(c4, witness) == 3

k4 = edgemu.Graph.from_graph6("C~")
assert edgemu.chromatic_index(k4) == 3
assert edgemu.is_interval_colorable(k4) is True
assert edgemu.mu_all(k4, workers=4)["summary"]["mu21"] == 2

petersen = edgemu.Graph.family("petersen")
assert edgemu.chromatic_index(petersen) == 4
assert edgemu.is_interval_colorable(petersen) is False

g, labels = edgemu.Graph.from_edge_list("10 30\n30 20\n20 40\n40 10\n")
assert labels == [10, 20, 30, 40] and g.edges == [(0, 2), (1, 2), (1, 3), (0, 3)]
assert edgemu.Graph.from_graph6(g.to_graph6()).regular_degree == 2

assert edgemu.rainbow_bound(3, 10) == 7
try:
    edgemu.rainbow_bound(1, 5)
except ValueError:
    pass
else:
    raise AssertionError("r = 1 accepted")

try:
    edgemu.mu_all(k4, node_budget=10)
except edgemu.BudgetExhausted:
    pass
else:
    raise AssertionError("budget not enforced")

report = edgemu.verify_family("cycle:3..8")
assert not any(c["status"] == "fail" for c in report["checks"])

print("edgemu smoke test passed")
