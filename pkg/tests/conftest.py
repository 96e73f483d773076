from functools import lru_cache

import pytest

import k4trees
from k4trees import cli, decomposition, n2c_weights, oracles, tree_builder
from k4trees.graph_core import component_count

# (graph, budget, certificate) for every certificate produced during the run
EMITTED_CERTIFICATES = []
ACCEPTANCE_LINES = []


@lru_cache(maxsize=None)
def connected_graphs(max_n):
    return tuple(G for n in range(1, max_n + 1) for G in oracles.enumerate_connected_graphs(n))


@lru_cache(maxsize=None)
def k4_free_graphs(max_n):
    return tuple(G for G in connected_graphs(max_n) if decomposition.is_k4_minor_free(G))


def _recording(func):
    def wrapper(G, f, *args, **kwargs):
        out = func(G, f, *args, **kwargs)
        if isinstance(out, n2c_weights.ViolationCertificate):
            EMITTED_CERTIFICATES.append((G, n2c_weights.make_budget(G, f), out))
        return out

    wrapper.__wrapped__ = func
    return wrapper


@pytest.fixture(scope="session", autouse=True)
def record_certificates():
    aw = _recording(n2c_weights.assign_weights)
    cb = _recording(oracles.check_condition_bruteforce)
    bt = _recording(tree_builder.build_degree_bounded_tree)
    with pytest.MonkeyPatch.context() as mp:
        mp.setattr(n2c_weights, "assign_weights", aw)
        mp.setattr(k4trees, "assign_weights", aw)
        mp.setattr(k4trees, "build_degree_bounded_tree", bt)
        mp.setattr(tree_builder, "assign_weights", aw)
        mp.setattr(cli, "assign_weights", aw)
        mp.setattr(oracles, "check_condition_bruteforce", cb)
        mp.setattr(cli, "check_condition_bruteforce", cb)
        mp.setattr(tree_builder, "build_degree_bounded_tree", bt)
        mp.setattr(cli, "build_degree_bounded_tree", bt)
        yield


def certificate_failures():
    bad = []
    for G, f, cert in EMITTED_CERTIFICATES:
        observed = component_count(G, cert.U)
        budget = sum(f[v] - 1 for v in cert.U)
        if not (cert.U and observed > budget):
            bad.append((G.edges(), f, sorted(cert.U)))
    return bad


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_LINES and not EMITTED_CERTIFICATES:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for line in ACCEPTANCE_LINES:
        tr.write_line(line)
    bad = certificate_failures()
    status = "PASS" if not bad else "FAIL"
    tr.write_line(
        f"[{status}] criterion 3 (full run): {len(EMITTED_CERTIFICATES)} certificates "
        f"recomputed, {len(bad)} unsound"
    )
