"""Counting identities for strongly regular graphs with lambda = 1, mu = 2."""

import json

from ._core import (
    Error,
    Graph,
    Graph6Error,
    InconsistencyError,
    InfeasibleParams,
    PreconditionError,
    build_bvls243,
    build_k3,
    build_known,
    build_paley9,
    c6_binomial_sum,
    c6_closed_form,
    charpoly_prefix,
    ci_detsum,
    cycle_census,
    exhaustive_type_census,
    feasible_parameters,
    from_graph6,
    hexagon_bound,
    load_graph6,
    makhnev_condition,
    pentagons_through_edge,
    run_all_checks_json,
    save_graph6,
    srg_spectrum,
    to_graph6,
    type_census,
    verify_polynomial_chain,
    verify_srg,
)


def run_all_checks(graph, source="memory", workers=None, exhaustive_limit=16):
    """The identity report as a dict with "graph_meta", "entries" and "summary"."""
    return json.loads(run_all_checks_json(graph, source, workers, exhaustive_limit))


__all__ = [name for name in dir() if not name.startswith("_") and name != "json"]
