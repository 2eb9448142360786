//! Property tests over randomly generated graphs, drawings and lists.

use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

use choosable::drawing::{planarize, Drawing};
use choosable::format::{parse_instance, serialize_instance};
use choosable::harness::gen::*;
use choosable::harness::svg::render_svg;
use choosable::instance::Instance;
use choosable::lists::{verify_coloring, Color, Coloring, ListAssignment};
use choosable::oracle::{is_choosable, solve_exact};
use choosable::plane::{edge, PlaneGraph, SubgraphRef, Vertex, Walk};
use choosable::solver::{color_basic, select_x, OuterContext};
use choosable::validity::{
    check_basic, check_distant, check_main0, check_theorem, check_valid, confirm_witness, special_subgraphs,
    AssumeColorable, Condition, TheoremId,
};

fn triangulation(seed: u64, n: usize) -> PlaneGraph {
    let mut r = rng(seed);
    relabel_random(&near_triangulation(n, 3, &mut r), &mut r)
}

fn bfs(adj: &[Vec<Vertex>], s: Vertex) -> Vec<Option<usize>> {
    let mut d = vec![None; adj.len()];
    d[s] = Some(0);
    let mut q = std::collections::VecDeque::from([s]);
    while let Some(u) = q.pop_front() {
        for &w in &adj[u] {
            if d[w].is_none() {
                d[w] = Some(d[u].unwrap() + 1);
                q.push_back(w);
            }
        }
    }
    d
}

/// Neighbors of `v` in rotation order; a cycle when `v` is inside a
/// triangulation.
fn link(g: &PlaneGraph, v: Vertex) -> Walk {
    Walk::cycle(g.rotation(v).to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn euler_on_generated_embeddings(seed in any::<u64>(), n in 3usize..40, k in 3usize..10, drop in 0.0f64..0.8) {
        let mut r = rng(seed);
        let k = k.min(n);
        let g = sparsify(&near_triangulation(n, k, &mut r), drop, &mut r);
        prop_assert!(g.check_euler().is_ok());
        let faces = g.trace_faces().len();
        prop_assert_eq!(g.n() as i64 - g.edge_count() as i64 + faces as i64, 2);
    }

    #[test]
    fn split_at_cycle_partitions_edges(seed in any::<u64>(), n in 5usize..=30) {
        let g = triangulation(seed, n);
        let outer = g.outer_vertices();
        let mut cycles = vec![g.outer_cycle().unwrap()];
        cycles.extend((0..n).filter(|v| !outer.contains(v)).take(3).map(|v| link(&g, v)));
        let all: BTreeSet<_> = g.edges().into_iter().map(|(u, v)| edge(u, v)).collect();
        for c in cycles {
            let (inside, outside) = g.split_at_cycle(&c).unwrap();
            let (ei, eo) = (inside.host_edges(), outside.host_edges());
            let union: BTreeSet<_> = ei.union(&eo).copied().collect();
            let shared: BTreeSet<_> = ei.intersection(&eo).copied().collect();
            let cycle_edges: BTreeSet<_> = c.edges().into_iter().collect();
            prop_assert_eq!(union, all.clone());
            prop_assert_eq!(shared, cycle_edges);
            let vs: BTreeSet<_> = inside.host_vertices().intersection(&outside.host_vertices()).copied().collect();
            prop_assert_eq!(vs, c.vertices.iter().copied().collect::<BTreeSet<_>>());
        }
    }

    #[test]
    fn subgraph_distance_is_a_metric_on_vertices(seed in any::<u64>(), n in 4usize..25) {
        let g = sparsify(&triangulation(seed, n), 0.5, &mut rng(seed ^ 1));
        let mut r = rng(seed);
        let pick = |r: &mut GenRng| SubgraphRef::from_vertices((0..r.gen_range(1..=3)).map(|_| r.gen_range(0..n)));
        let (h1, h2) = (pick(&mut r), pick(&mut r));
        let d12 = g.subgraph_distance(&h1, &h2);
        prop_assert_eq!(d12, g.subgraph_distance(&h2, &h1));
        for v in 0..n {
            let sv = SubgraphRef::vertex(v);
            let via = g.subgraph_distance(&h1, &sv).unwrap() + g.subgraph_distance(&sv, &h2).unwrap();
            prop_assert!(d12.unwrap() <= via);
        }
    }

    #[test]
    fn q_components_share_exactly_the_chord(seed in any::<u64>(), n in 6usize..=14, k in 4usize..9, order in 1usize..=3) {
        let mut r = rng(seed);
        let g = near_triangulation(n, k.min(n), &mut r);
        let outer = g.outer_cycle().unwrap();
        let all: BTreeSet<_> = g.edges().into_iter().map(|(u, v)| edge(u, v)).collect();
        for q in g.k_chords(&outer, order).unwrap().into_iter().take(4) {
            let (g1, g2) = g.q_components(&outer, &q).unwrap();
            let (e1, e2) = (g1.host_edges(), g2.host_edges());
            let union: BTreeSet<_> = e1.union(&e2).copied().collect();
            let shared: BTreeSet<_> = e1.intersection(&e2).copied().collect();
            prop_assert_eq!(union, all.clone());
            prop_assert_eq!(shared, q.edges().into_iter().collect::<BTreeSet<_>>());
            let vs: BTreeSet<_> = g1.host_vertices().intersection(&g2.host_vertices()).copied().collect();
            prop_assert_eq!(vs, q.vertices.iter().copied().collect::<BTreeSet<_>>());
        }
    }

    #[test]
    fn k_chords_match_brute_force(seed in any::<u64>(), n in 4usize..=10, k in 3usize..8, order in 1usize..=3) {
        let mut r = rng(seed);
        let g = sparsify(&near_triangulation(n, k.min(n), &mut r), 0.3, &mut r);
        let Some(outer) = g.outer_cycle() else { return Ok(()) };
        let on: BTreeSet<Vertex> = outer.vertices.iter().copied().collect();
        let cycle_edges: BTreeSet<_> = outer.edges().into_iter().collect();
        let found: Vec<Vec<Vertex>> = g.k_chords(&outer, order).unwrap().into_iter().map(|w| w.vertices).collect();
        for q in &found {
            prop_assert!(q[1..q.len() - 1].iter().all(|v| !on.contains(v)));
        }
        // Every tuple of order + 1 distinct vertices.
        let mut brute = Vec::new();
        let mut tuple = vec![0; order + 1];
        let total = n.pow(order as u32 + 1);
        for code in 0..total {
            let mut c = code;
            for t in tuple.iter_mut() {
                *t = c % n;
                c /= n;
            }
            let distinct: BTreeSet<_> = tuple.iter().collect();
            let ok = distinct.len() == tuple.len()
                && tuple.windows(2).all(|w| g.has_edge(w[0], w[1]))
                && on.contains(&tuple[0])
                && on.contains(&tuple[order])
                && tuple[0] < tuple[order]
                && tuple[1..order].iter().all(|v| !on.contains(v))
                && !(order == 1 && cycle_edges.contains(&edge(tuple[0], tuple[1])));
            if ok {
                brute.push(tuple.clone());
            }
        }
        brute.sort();
        prop_assert_eq!(found, brute);
    }
}

/// A random instance for the validity properties: a triangulation with up
/// to two crossings, random N and M sets, lists of size 1 to 6, and maybe a
/// precolored outer path.
fn validity_instance(seed: u64) -> Instance {
    let mut r = rng(seed);
    let n = r.gen_range(4..=16);
    let g = relabel_random(&near_triangulation(n, r.gen_range(3..=n), &mut r), &mut r);
    let p = if r.gen_bool(0.5) { random_outer_path(&g, r.gen_range(0..=3), &mut r).unwrap_or_default() } else { vec![] };
    let crossings = r.gen_range(0..=2);
    let path_edges: BTreeSet<_> = p.windows(2).map(|w| edge(w[0], w[1])).collect();
    let d = plant_crossings(&Drawing::planar(g), crossings, &mut r, |d| {
        d.crossings().iter().all(|c| [c.e1, c.e2].iter().all(|&(a, b)| !path_edges.contains(&edge(a, b))))
    })
    .unwrap_or_else(|_| Drawing::planar(triangulation(seed, n)));
    let p = if d.crossing_count() == 0 && !p.is_empty() && d.base().check_path(&Walk::path(p.clone())).is_err() {
        vec![]
    } else {
        p
    };
    let n_set: BTreeSet<Vertex> = (0..n).filter(|_| r.gen_bool(0.15)).collect();
    let edges = d.original_edges();
    let m_set: BTreeSet<_> = edges.iter().copied().filter(|_| r.gen_bool(0.1)).collect();
    let lists = ListAssignment::new(
        (0..n)
            .map(|v| if p.contains(&v) { random_list(7, 1, &mut r) } else { random_list(7, r.gen_range(1..=6), &mut r) })
            .collect(),
    );
    Instance::new(d.clone(), Walk::path(p), n_set.clone(), m_set.clone(), lists.clone())
        .unwrap_or_else(|_| Instance::new(d, Walk::default(), n_set, m_set, lists).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn main0_agrees_with_distance_condition(seed in any::<u64>()) {
        let mut inst = validity_instance(seed);
        inst.p = Walk::default();
        inst.m_set.clear();
        let main0 = check_main0(&inst.drawing, &inst.n_set, &inst.lists);
        let distant = check_distant(&inst);
        prop_assert_eq!(main0.condition_passed(Condition::Distance), distant.condition_passed(Condition::Distance));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn every_witness_reproduces(seed in any::<u64>()) {
        let inst = validity_instance(seed);
        let mut reports = vec![check_valid(&inst), check_distant(&inst)];
        for t in TheoremId::ALL {
            if let Ok(r) = check_theorem(&inst, t, &AssumeColorable) {
                reports.push(r);
            }
        }
        for r in reports {
            for c in r.failures() {
                for w in &c.violations {
                    if c.condition == Condition::Obstructions {
                        continue;
                    }
                    prop_assert!(confirm_witness(&inst, c.condition, w), "{:?} {:?}", c.condition, w);
                }
            }
        }
    }

    #[test]
    fn ranks_stay_in_table(seed in any::<u64>()) {
        let inst = validity_instance(seed);
        for s in special_subgraphs(&inst) {
            prop_assert!([0, 2, 3, 4].contains(&s.rank));
        }
    }

    #[test]
    fn validity_is_monotone(seed in any::<u64>()) {
        let inst = validity_instance(seed);
        let before = check_valid(&inst);
        let failed = |r: &choosable::validity::ValidityReport, c| r.condition_passed(c) == Some(false);
        let mut r = rng(seed);
        let mut bigger = inst.clone();
        let v = r.gen_range(0..inst.n());
        if !inst.p.vertices.contains(&v) {
            bigger.lists.get_mut(v).extend(10..10 + r.gen_range(1..4));
        }
        let after = check_valid(&bigger);
        for c in [Condition::S, Condition::N] {
            prop_assert!(!failed(&after, c) || failed(&before, c), "{:?}", c);
        }
        if let Some(&e) = inst.m_set.iter().next() {
            let mut fewer = inst.clone();
            fewer.m_set.remove(&e);
            let after = check_valid(&fewer);
            prop_assert!(!failed(&before, Condition::M) || failed(&after, Condition::M));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn color_basic_is_deterministic(seed in any::<u64>(), n in 4usize..=16) {
        let mut r = rng(seed);
        let g = relabel_random(&near_triangulation(n, r.gen_range(3..=n), &mut r), &mut r);
        let p = random_outer_path(&g, 2, &mut r).unwrap();
        let lists = basic_lists(&g, &p, 6, &mut r);
        let walk = Walk::path(p);
        prop_assume!(check_basic(&g, &walk, &lists).unwrap().passed());
        let a = color_basic(&g, &walk, &lists).unwrap();
        prop_assert_eq!(&a, &color_basic(&g, &walk, &lists).unwrap());
        prop_assert!(verify_coloring(&g.adjacency(), &lists, &a).is_ok());
    }

    #[test]
    fn select_x_is_deterministic(seed in any::<u64>()) {
        let mut r = rng(seed);
        let sizes: Vec<usize> = (0..4).map(|_| r.gen_range(3..=5)).collect();
        let ctx = OuterContext {
            p0: 0,
            v: [1, 2, 3, 4],
            list_p0: random_list(7, 1, &mut r),
            lists: [0, 1, 2, 3].map(|i| random_list(7, sizes[i], &mut r)),
            common_neighbor: r.gen_bool(0.5),
            crossing_adjacent: r.gen_bool(0.2),
        };
        prop_assert_eq!(select_x(&ctx), select_x(&ctx));
    }

    #[test]
    fn oracle_matches_enumeration(seed in any::<u64>(), n in 1usize..=6) {
        let mut r = rng(seed);
        let adj: Vec<Vec<Vertex>> = {
            let mut a = vec![Vec::new(); n];
            for u in 0..n {
                for v in u + 1..n {
                    if r.gen_bool(0.6) {
                        a[u].push(v);
                        a[v].push(u);
                    }
                }
            }
            a
        };
        let lists = ListAssignment::new((0..n).map(|_| random_list(4, r.gen_range(1..=4), &mut r)).collect());
        let mut any = false;
        let mut codes = vec![0usize; n];
        let ls: Vec<Vec<Color>> = (0..n).map(|v| lists.get(v).iter().copied().collect()).collect();
        'all: loop {
            let c = Coloring((0..n).map(|v| ls[v][codes[v]]).collect());
            if verify_coloring(&adj, &lists, &c).is_ok() {
                any = true;
                break;
            }
            for v in 0..n {
                codes[v] += 1;
                if codes[v] < ls[v].len() {
                    continue 'all;
                }
                codes[v] = 0;
            }
            break;
        }
        let a = solve_exact(&adj, &lists);
        prop_assert_eq!(a.is_colorable(), any);
        let b = solve_exact(&adj, &lists);
        prop_assert_eq!(&a.coloring, &b.coloring);
        prop_assert_eq!(a.stats.nodes, b.stats.nodes);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn choosability_survives_relabeled_lists(seed in any::<u64>(), n in 3usize..=5, k in 2usize..=3) {
        let mut r = rng(seed);
        let g = sparsify(&near_triangulation(n, n.min(4).max(3), &mut r), 0.3, &mut r);
        let adj = g.adjacency();
        let palette = 2 * k;
        let ch = is_choosable(&adj, k, palette).unwrap();
        for _ in 0..20 {
            let mut perm: Vec<Color> = (1..=palette as Color + 3).collect();
            perm.shuffle(&mut r);
            let lists = match &ch.witness {
                None => ListAssignment::new((0..n).map(|_| random_list(palette as u32, k, &mut r)).collect()),
                Some(w) => ListAssignment::new(
                    w.as_slice().iter().map(|l| l.iter().map(|&c| perm[c as usize]).collect()).collect(),
                ),
            };
            prop_assert_eq!(solve_exact(&adj, &lists).is_colorable(), ch.choosable);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn drawings_round_trip_and_alternate(seed in any::<u64>(), n in 5usize..30, crossings in 0usize..=3) {
        let mut r = rng(seed);
        let g = relabel_random(&near_triangulation(n, 3, &mut r), &mut r);
        let Ok(d) = plant_crossings(&Drawing::planar(g), crossings, &mut r, |_| true) else { return Ok(()) };
        let spec = d.unplanarize();
        prop_assert_eq!(&planarize(&spec).unwrap(), &d);
        for c in d.crossings() {
            let rot = d.base().rotation(c.dummy);
            prop_assert_eq!(rot.len(), 4);
            let on = |v: Vertex, e: (Vertex, Vertex)| v == e.0 || v == e.1;
            for i in 0..4 {
                let (a, b) = (rot[i], rot[(i + 1) % 4]);
                prop_assert!((on(a, c.e1) && on(b, c.e2)) || (on(a, c.e2) && on(b, c.e1)));
            }
        }
    }

    #[test]
    fn distances_use_original_edges(seed in any::<u64>(), n in 5usize..25) {
        let mut r = rng(seed);
        let g = relabel_random(&near_triangulation(n, 3, &mut r), &mut r);
        let Ok(d) = plant_crossings(&Drawing::planar(g), 2, &mut r, |_| true) else { return Ok(()) };
        let orig = d.original_adjacency();
        let no_dummies: Vec<Vec<Vertex>> =
            (0..n).map(|v| d.base().rotation(v).iter().copied().filter(|&w| w < n).collect()).collect();
        for c in d.crossings() {
            for (a, b) in [c.e1, c.e2] {
                prop_assert!(orig[a].contains(&b));
                prop_assert!(!no_dummies[a].contains(&b));
            }
        }
        for s in 0..n {
            let (x, y) = (bfs(&orig, s), bfs(&no_dummies, s));
            for v in 0..n {
                prop_assert!(x[v].is_some());
                if let Some(dv) = y[v] {
                    prop_assert!(x[v].unwrap() <= dv);
                }
            }
        }
    }

    #[test]
    fn generated_instances_round_trip(seed in any::<u64>(), pick in 0usize..5) {
        let family = match pick {
            0 => Family::Triangulation { n: 12, crossings: 2 },
            1 => Family::Grid { rows: 4, cols: 5 },
            2 => Family::WheelStack { rim: 6, rings: 2 },
            3 => Family::NearPlanar { rows: 16, cols: 16, crossings: 1, n_vertices: 2 },
            _ => Family::FarFours { spine: 22, ears: 3, n_vertices: 2, spacing: 11 },
        };
        let spec = GenSpec { family, lists: ListProfile::Uniform { size: 5 }, palette: 7, seed };
        let inst = gen_instance(&spec).unwrap();
        let text = serialize_instance(&inst);
        prop_assert_eq!(&text, &serialize_instance(&gen_instance(&spec).unwrap()));
        prop_assert_eq!(&parse_instance(&text).unwrap(), &inst);
        let svg = render_svg(&inst, None);
        prop_assert_eq!(svg.matches("<circle").count(), inst.n());
        prop_assert_eq!(svg.matches(r#"class="crossing""#).count(), inst.drawing.crossing_count());
        prop_assert_eq!(&svg, &render_svg(&inst, None));
    }
}

#[test]
fn validity_instances_vary() {
    // The generator above should exercise crossings, N, M and paths.
    let insts: Vec<Instance> = (0..200).map(validity_instance).collect();
    assert!(insts.iter().any(|i| i.drawing.crossing_count() == 2));
    assert!(insts.iter().any(|i| !i.n_set.is_empty()));
    assert!(insts.iter().any(|i| !i.m_set.is_empty()));
    assert!(insts.iter().any(|i| i.p.length() == 3));
    let failing: BTreeMap<Condition, usize> = insts.iter().flat_map(|i| check_valid(i).failures().map(|c| c.condition).collect::<Vec<_>>()).fold(
        BTreeMap::new(),
        |mut m, c| {
            *m.entry(c).or_insert(0) += 1;
            m
        },
    );
    assert!(failing.len() >= 4, "{failing:?}");
}
