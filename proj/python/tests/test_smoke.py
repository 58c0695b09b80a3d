import itertools

import pytest

import srg12


def test_graph_basics():
    g = srg12.Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert g.order == 4
    assert g.edge_count == 4
    assert g.adjacent(0, 3)
    assert not g.adjacent(0, 2)
    assert g.neighbors(1) == [0, 2]
    assert g.edges() == [(0, 1), (0, 3), (1, 2), (2, 3)]


def test_graph6_round_trip_and_errors():
    p = srg12.build_paley9()
    assert srg12.from_graph6(srg12.to_graph6(p)) == p
    assert srg12.to_graph6(srg12.build_k3()) == "Bw"
    with pytest.raises(srg12.Graph6Error):
        srg12.from_graph6("B!")
    with pytest.raises(srg12.Error):
        srg12.from_graph6("")


def test_c6_values():
    want = {
        (9, 4): -168,
        (99, 14): -47288703,
        (243, 22): -2975686065,
        (6273, 112): -7204770339625320,
        (494019, 994): -2466795174682153663896408,
    }
    for (n, k), c6 in want.items():
        assert srg12.c6_closed_form(n, k) == c6
        assert srg12.c6_binomial_sum(n, k) == c6
    with pytest.raises(srg12.InfeasibleParams):
        srg12.c6_closed_form(100, 14)


def test_spectrum_and_feasible_parameters():
    s = srg12.srg_spectrum(99, 14)
    assert s["eigenvalues"] == (14, 3, -4)
    assert s["multiplicities"] == (1, 54, 44)
    rows = srg12.feasible_parameters(1000)
    assert [r["k"] for r in rows] == [4, 14, 22, 112, 994]
    assert rows[0]["known_graph"] == "paley9"
    assert rows[1]["known_graph"] is None


def test_constructions_and_verification():
    p = srg12.build_known("paley9")
    assert srg12.verify_srg(p, 9, 4)["ok"]
    r = srg12.verify_srg(p, 10, 4)
    assert not r["ok"]
    assert r["mismatches"]
    with pytest.raises(ValueError):
        srg12.build_known("petersen")


def test_spectral_on_graph():
    p = srg12.build_paley9()
    c = srg12.charpoly_prefix(p)
    assert c[:3] == [1, 0, -18]
    assert c[6] == -168
    assert srg12.ci_detsum(p, 6) == -168


def brute_force_cycles(g, length):
    count = 0
    for vs in itertools.combinations(range(g.order), length):
        degrees = [sum(g.adjacent(a, b) for b in vs if b != a) for a in vs]
        edges = sum(degrees) // 2
        if edges == length and all(d == 2 for d in degrees):
            seen, stack = {vs[0]}, [vs[0]]
            while stack:
                a = stack.pop()
                for b in vs:
                    if b not in seen and g.adjacent(a, b):
                        seen.add(b)
                        stack.append(b)
            count += len(seen) == length
    return count


def test_cycle_census_matches_brute_force():
    p = srg12.build_paley9()
    c = srg12.cycle_census(p, workers=2)
    assert c == {"p3": 6, "p4": 9, "p5": 0, "p6": 6}
    for length in (3, 4, 5, 6):
        assert c[f"p{length}"] == brute_force_cycles(p, length)


def test_type_census_matches_exhaustive():
    p = srg12.build_paley9()
    assert srg12.type_census(p) == srg12.exhaustive_type_census(p)


def test_report():
    report = srg12.run_all_checks(srg12.build_paley9(), source="paley9")
    assert report["graph_meta"] == {"n": 9, "k": 4, "edges": 18, "source": "paley9"}
    assert report["summary"]["fail"] == 0
    master = next(e for e in report["entries"] if e["name"] == "master identity")
    assert master["expected"] == master["actual"] == 648

    c4 = srg12.run_all_checks(srg12.Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)]))
    assert not c4["summary"]["all_pass"]


def test_hexagons_and_chain():
    assert srg12.hexagon_bound(243, 22) == 4980690
    m = srg12.makhnev_condition(srg12.Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4)]))
    assert not m["holds"]
    assert m["witness"][0] == (0, 1, 2)
    ks = list(range(4, 30, 2))
    assert srg12.verify_polynomial_chain(ks)["ok"]
    assert srg12.verify_polynomial_chain(ks, bound_k0=54)["failures"] == len(ks)
    with pytest.raises(srg12.PreconditionError):
        srg12.verify_polynomial_chain(ks[:5])
