use gallai_product::base::{gallai_base_decomposition, verify_base, BaseDecomposition, Component};
use gallai_product::catalog::{generate, named, tadpole, GenKind};
use gallai_product::classify::{classify, ClassTag, StructureClass};
use gallai_product::oracle::{min_path_decomposition, subdivision_invariance_check, DEFAULT_ORACLE_BUDGET};
use gallai_product::product::{
    component_product, core_graph, cycle_product, smooth, vr_product, ProductDecomposition, Shape, VRComponent, VRKind,
};
use gallai_product::structured::{
    bicyclic_decompose, decompose, split_vertex, tree_vr_decomposition, unicyclic_decompose, verify_product,
};
use gallai_product::verify::verify_decomposition;
use gallai_product::{Error, Graph};

fn p(g: &Graph) -> usize {
    min_path_decomposition(g, DEFAULT_ORACLE_BUDGET).unwrap().value
}

fn checked(g: &Graph, h: &Graph, d: &ProductDecomposition) -> usize {
    let r = verify_product(g, h, d);
    assert!(r.passed, "{:?}", r.failures);
    d.len()
}

fn bowtie() -> Graph {
    named("bowtie").unwrap()
}

#[test]
fn edge_list_parsing() {
    let p3 = Graph::parse_edge_list("0 1\n1 2").unwrap();
    assert_eq!((p3.n(), p3.m()), (3, 2));
    let k4 = Graph::parse_edge_list("0 1\n0 2\n0 3\n1 2\n1 3\n2 3").unwrap();
    assert_eq!((k4.n(), k4.m()), (4, 6));
    assert_eq!(Graph::parse_edge_list("0 0"), Err(Error::SelfLoop(0)));
}

#[test]
fn parity_profiles() {
    let pp = |g: Graph| (g.parity_profile().n_odd, g.parity_profile().n_even);
    assert_eq!(pp(Graph::complete(4)), (4, 0));
    assert_eq!(pp(Graph::complete(5)), (0, 5));
    assert_eq!(pp(Graph::path(3)), (2, 1));
}

#[test]
fn classification_witnesses() {
    match classify(&Graph::cycle(5)).unwrap() {
        StructureClass::Cycle { cycle } => assert_eq!(cycle.len(), 5),
        c => panic!("{c:?}"),
    }
    let f = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 2), (1, 3)]).unwrap();
    assert_eq!(classify(&f).unwrap().tag(), ClassTag::FamilyF);
    match classify(&tadpole(3, 2).unwrap()).unwrap() {
        StructureClass::Tadpole { cycle_len, tail_len, .. } => assert_eq!((cycle_len, tail_len), (3, 2)),
        c => panic!("{c:?}"),
    }
    assert_eq!(classify(&Graph::new(4, [(0, 1), (2, 3)]).unwrap()), Err(Error::Disconnected));
}

#[test]
fn product_sizes() {
    let sq = Graph::path(2).cartesian_product(&Graph::path(2));
    assert_eq!((sq.n(), sq.m()), (4, 4));
    let h = named("paw").unwrap();
    let k1h = Graph::empty(1).cartesian_product(&h);
    assert_eq!((k1h.n(), k1h.edges()), (h.n(), h.edges()));
    let g = Graph::path(3).cartesian_product(&Graph::cycle(4));
    assert_eq!((g.n(), g.m()), (12, 20));
}

#[test]
fn vr_product_sizes() {
    let p2 = Graph::path(2);
    let s = VRComponent::path(vec![0, 1, 2], vec![true, false, true]).unwrap();
    let g = vr_product(&s, &p2).unwrap();
    assert_eq!((g.n(), g.m()), (6, 6));
    let all = VRComponent::all_real(VRKind::Path, vec![0, 1, 2, 3]).unwrap();
    assert_eq!(vr_product(&all, &p2).unwrap().edges(), Graph::path(4).cartesian_product(&p2).edges());
    let c = VRComponent::cycle(vec![0, 1, 2, 3], vec![true, true, true, false]).unwrap();
    let g = vr_product(&c, &p2).unwrap();
    assert_eq!((g.n(), g.m()), (8, 11));
    assert!(VRComponent::cycle(vec![0, 1, 2, 3], vec![true, false, true, false]).is_err());
}

#[test]
fn smoothing_examples() {
    let s = smooth(&VRComponent::path(vec![0, 1, 2], vec![true, false, true]).unwrap()).unwrap();
    assert_eq!((s.graph.n(), s.graph.m()), (2, 1));
    assert_eq!(s.expand_edge(0, 1), vec![0, 1, 2]);
    let c6 = VRComponent::cycle((0..6).collect(), (0..6).map(|i| i % 2 == 0).collect()).unwrap();
    let s = smooth(&c6).unwrap();
    assert_eq!(classify(&s.graph).unwrap().tag(), ClassTag::Cycle);
    assert_eq!(s.graph.n(), 3);
    assert!(s.graph.edges().iter().all(|&(a, b)| s.expand_edge(a, b).len() == 3));
}

#[test]
fn base_decompositions_of_small_graphs() {
    let k4 = Graph::complete(4);
    let d = gallai_base_decomposition(&k4).unwrap();
    assert_eq!((d.odd_odd.len(), d.stats.t1), (2, 2));
    let k5 = Graph::complete(5);
    let d = gallai_base_decomposition(&k5).unwrap();
    assert_eq!((d.path_count(), d.closed_trails.len(), d.closed_trails[0].r()), (5, 1, 5));
    let c4 = Graph::cycle(4);
    let d = gallai_base_decomposition(&c4).unwrap();
    assert_eq!((d.path_count(), d.closed_trails.len()), (4, 1));
    let p2 = Graph::path(2);
    let d = gallai_base_decomposition(&p2).unwrap();
    let r = verify_base(&p2, &d);
    assert!(r.passed);
    assert_eq!(d.stats.t1, 1);
}

fn only_component(base: &BaseDecomposition) -> Component<'_> {
    let comps: Vec<Component<'_>> = base.components().collect();
    assert_eq!(comps.len(), 1);
    comps[0]
}

/// The product of a core with `H`, where `H`'s base is a single component.
fn single_component_count(shape: Shape, m: usize, h: &Graph) -> usize {
    let base = gallai_base_decomposition(h).unwrap();
    let (paths, rec) = component_product(shape, m, only_component(&base)).unwrap();
    let d = ProductDecomposition::new(paths, "component", vec![rec]);
    checked(&core_graph(shape, m).unwrap(), h, &d)
}

#[test]
fn component_counts() {
    // P2 is one odd-odd path, P4 an open trail with r = 3, C4 a closed trail with r = 4;
    // the tadpole with l = m = 3 is the triangle
    assert_eq!(single_component_count(Shape::Cycle, 3, &Graph::path(2)), 3);
    assert_eq!(single_component_count(Shape::Cycle, 3, &Graph::path(4)), 5);
    assert!(single_component_count(Shape::FamilyB, 5, &Graph::cycle(4)) <= 9);
}

#[test]
fn diamond_with_k4() {
    let diamond = named("diamond").unwrap();
    let h = Graph::complete(4);
    assert_eq!(diamond.cartesian_product(&h).m(), 44);
    let d = decompose(&diamond, &h).unwrap();
    assert!(checked(&diamond, &h, &d) <= 8);
    assert!(checked(&diamond, &h, &bicyclic_decompose(&diamond, &h).unwrap()) <= 8);
}

#[test]
fn cycle_products() {
    let (c3, p2) = (Graph::cycle(3), Graph::path(2));
    let d = cycle_product(3, &p2, None).unwrap();
    assert_eq!(checked(&c3, &p2, &d), 3);
    assert_eq!(p(&c3.cartesian_product(&p2)), 3);
    let c4 = Graph::cycle(4);
    let d = decompose(&c4, &p2).unwrap();
    assert_eq!(checked(&c4, &p2, &d), 4);
    assert_eq!(p(&c4.cartesian_product(&p2)), 4);
    assert!(cycle_product(2, &p2, None).is_err());
}

#[test]
fn single_path_and_cycle_factors() {
    let (p4, p2) = (Graph::path(4), Graph::path(2));
    assert!(checked(&p4, &p2, &decompose(&p4, &p2).unwrap()) <= 4);
    let (c6, p3) = (Graph::cycle(6), Graph::path(3));
    assert!(checked(&c6, &p3, &decompose(&c6, &p3).unwrap()) <= 9);
}

#[test]
fn tree_plans() {
    assert_eq!(tree_vr_decomposition(&Graph::path(5)).unwrap().pieces.len(), 1);
    let claw = tree_vr_decomposition(&Graph::star(3)).unwrap();
    assert_eq!(claw.pieces.len(), 2);
    let reals: usize = claw.pieces.iter().map(|p| p.real_count()).sum();
    assert_eq!(reals, 4);
    let spider = Graph::new(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
    assert_eq!(tree_vr_decomposition(&spider).unwrap().pieces.len(), 2);
    assert_eq!(p(&spider), 2);
}

#[test]
fn unicyclic_examples() {
    let p2 = Graph::path(2);
    let paw = named("paw").unwrap();
    assert!(checked(&paw, &p2, &unicyclic_decompose(&paw, &p2).unwrap()) <= 4);
    // four odd vertices in the product; exhaustive search finds two paths
    let exact = min_path_decomposition(&paw.cartesian_product(&p2), DEFAULT_ORACLE_BUDGET).unwrap();
    assert_eq!((exact.lower_bound, exact.value), (2, 2));
    let g = Graph::new(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 5)]).unwrap();
    assert!(checked(&g, &p2, &unicyclic_decompose(&g, &p2).unwrap()) <= 6);
    let (c5, k4) = (Graph::cycle(5), Graph::complete(4));
    assert!(checked(&c5, &k4, &unicyclic_decompose(&c5, &k4).unwrap()) <= 10);
    assert!(unicyclic_decompose(&Graph::path(4), &p2).is_err());
}

#[test]
fn bicyclic_examples() {
    let p2 = Graph::path(2);
    assert!(checked(&bowtie(), &p2, &bicyclic_decompose(&bowtie(), &p2).unwrap()) <= 5);
    let dumbbell = Graph::new(7, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 4)]).unwrap();
    assert!(checked(&dumbbell, &p2, &bicyclic_decompose(&dumbbell, &p2).unwrap()) <= 7);
    assert!(bicyclic_decompose(&Graph::cycle(5), &p2).is_err());
}

#[test]
fn vertex_splits() {
    let p3 = split_vertex(&Graph::path(3), 1, &[0], &[2]).unwrap();
    assert_eq!(p3.components().len(), 2);
    let c6 = split_vertex(&bowtie(), 0, &[1, 3], &[2, 4]).unwrap();
    assert_eq!(classify(&c6).unwrap().tag(), ClassTag::Cycle);
    let lone = split_vertex(&bowtie(), 0, &[1, 2, 3, 4], &[]).unwrap();
    assert_eq!((lone.n(), lone.degree(5)), (6, 0));
    assert!(split_vertex(&bowtie(), 0, &[1], &[2]).is_err());
}

#[test]
fn dispatcher() {
    let (p3, c3) = (Graph::path(3), Graph::cycle(3));
    assert!(checked(&p3, &p3, &decompose(&p3, &p3).unwrap()) <= 4);
    assert!(checked(&c3, &c3, &decompose(&c3, &c3).unwrap()) <= 4);
    assert_eq!(decompose(&Graph::complete(4), &Graph::path(2)), Err(Error::Unsupported("tricyclic".into())));
}

#[test]
fn verifier_examples() {
    let k4 = Graph::complete(4);
    let r = verify_decomposition(&k4, &[vec![0, 3, 1, 2], vec![1, 0, 2, 3]]);
    assert!(r.passed);
    assert_eq!(r.path_count, 2);
    let c4 = Graph::cycle(4);
    let r = verify_decomposition(&c4, &[vec![0, 1, 2], vec![2, 3, 0], vec![0, 1]]);
    assert!(r.failures.iter().any(|(k, _)| k == "edge_reused"));
    let r = verify_decomposition(&c4, &[vec![0, 1, 2]]);
    assert_eq!(r.failures.iter().filter(|(k, _)| k == "edge_uncovered").count(), 2);
}

#[test]
fn oracle_values() {
    for n in 2..=8 {
        assert_eq!(p(&Graph::path(n)), 1);
    }
    for n in 3..=8 {
        assert_eq!(p(&Graph::cycle(n)), 2);
    }
    assert_eq!(p(&Graph::complete(4)), 2);
    // computed by exhaustive search, below the five paths of the trail decomposition
    assert_eq!(p(&Graph::complete(5)), 3);
    assert_eq!(min_path_decomposition(&Graph::complete(6), 10), Err(Error::Budget(10)));
}

#[test]
fn subdivision_examples() {
    for (name, k) in [("C3", 2), ("K4", 1), ("paw", 3)] {
        assert!(subdivision_invariance_check(&named(name).unwrap(), k, 0, DEFAULT_ORACLE_BUDGET).unwrap());
    }
}

#[test]
fn generator_examples() {
    let g = generate(GenKind::Unicyclic, 6, 1).unwrap();
    assert!(g.is_connected());
    assert_eq!((g.n(), g.m()), (6, 6));
    let g = generate(GenKind::Bicyclic, 5, 7).unwrap();
    assert!(g.is_connected());
    assert_eq!((g.n(), g.m()), (5, 6));
    let g = generate(GenKind::Tree, 1, 0).unwrap();
    assert_eq!((g.n(), g.m()), (1, 0));
    assert!(generate(GenKind::Unicyclic, 2, 0).is_err());
    assert_eq!(generate(GenKind::Tree, 9, 3).unwrap(), generate(GenKind::Tree, 9, 3).unwrap());
}

#[test]
fn subdivision_can_lower_p() {
    // K5 minus an edge: nine edges on five vertices need three paths
    let g = Graph::new(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap();
    assert_eq!(p(&g), 3);
    for &(a, b) in g.edges() {
        let mut edges: Vec<(usize, usize)> = g.edges().iter().copied().filter(|&e| e != (a, b)).collect();
        edges.extend([(a, 5), (5, b)]);
        assert_eq!(p(&Graph::new(6, edges).unwrap()), 2);
    }
}
