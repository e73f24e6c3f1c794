use std::path::PathBuf;

use boolnet::dynamics::{asynchronous_state_graph, attractors, strong_convergence, weak_convergence};
use boolnet::hypercube::{basis_point, neighbor_set};
use boolnet::network::{network_count, random_network};
use boolnet::siggraph::{
    and_net, counting_condition, detect_circular, discrete_derivative, global_interaction_graph,
    local_interaction_graph, shih_dong_condition, CycleFilter,
};
use boolnet::subnetwork::{
    all_subnetworks_fixed_point_census, criticality, find_eosd_subnetwork, immediate_subnetwork, induced_subnetwork,
    minimal_forbidden_set, subnetwork_count, subnetworks, ForbiddenProperty,
};
use boolnet::theorems::{check, sweep, Generator, TheoremId, Verdict};
use boolnet::{
    BooleanNetwork, CircularForm, Components, Cycle, EosdClass, ParityClass, PointSet, Sign, SignedDigraph,
    SubnetworkSpec,
};

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "fixtures", name]
        .iter()
        .collect();
    std::fs::read_to_string(p).unwrap()
}

fn example() -> BooleanNetwork {
    BooleanNetwork::parse_bn(&fixture("and3.bn")).unwrap()
}

fn comps(n: usize) -> Components {
    Components::range(n).unwrap()
}

fn identity1() -> BooleanNetwork {
    BooleanNetwork::identity(comps(1))
}

fn negation1() -> BooleanNetwork {
    BooleanNetwork::negation(comps(1))
}

#[test]
fn point_arithmetic() {
    let v = comps(3);
    let p = |s: &str| v.parse_point(s).unwrap();
    assert_eq!(p("001").xor(&p("100")).unwrap().to_string(), "101");
    assert_eq!(p("011").xor(&p("111")).unwrap().to_string(), "100");
    assert_eq!(p("110").xor(&p("110")).unwrap().to_string(), "000");
    assert_eq!(p("000").hamming(&p("111")).unwrap(), 3);
    assert_eq!(p("001").hamming(&p("011")).unwrap(), 1);
    assert_eq!(basis_point(&v.set(&["2"]).unwrap()).to_string(), "010");
    assert_eq!(basis_point(&v.empty_set()).to_string(), "000");
    assert_eq!(basis_point(&v.full_set()).to_string(), "111");
    assert_eq!(
        p("101").restrict(&v.set(&["1", "3"]).unwrap()).unwrap().to_string(),
        "11"
    );
    assert_eq!(p("101").drop(&v.set(&["2"]).unwrap()).unwrap().to_string(), "11");
    assert_eq!(p("101").restrict(&v.full_set()).unwrap(), p("101"));
    assert_eq!(p("000").set_component("2", true).unwrap().to_string(), "010");
    assert_eq!(p("111").set_component("1", false).unwrap().to_string(), "011");
    assert_eq!(p("101").set_component("3", true).unwrap(), p("101"));
    assert!(p("101").hamming(&comps(2).point(0)).is_err());
}

#[test]
fn neighbour_sets() {
    let v = comps(3);
    let mut origin = PointSet::empty(&v);
    origin.insert_code(0);
    assert_eq!(neighbor_set(&origin).to_string(), "{001,010,100}");
    let w = comps(2);
    let mut two = PointSet::empty(&w);
    two.insert(&w.parse_point("00").unwrap()).unwrap();
    two.insert(&w.parse_point("11").unwrap()).unwrap();
    assert_eq!(neighbor_set(&two), PointSet::odd_points(&w));
    assert!(neighbor_set(&PointSet::empty(&v)).is_empty());
}

#[test]
fn network_basics() {
    let f = example();
    let v = f.components().clone();
    assert_eq!(f.evaluate(&v.parse_point("001").unwrap()).unwrap().to_string(), "100");
    assert_eq!(f.evaluate(&v.parse_point("110").unwrap()).unwrap().to_string(), "010");
    assert_eq!(
        f.conjugate()
            .evaluate(&v.parse_point("101").unwrap())
            .unwrap()
            .to_string(),
        "001"
    );
    assert_eq!(f.conjugate().conjugate(), f);
    assert!(BooleanNetwork::identity(comps(3))
        .conjugate()
        .table()
        .iter()
        .all(|&y| y == 0));
    let zero = BooleanNetwork::constant(comps(3), 0);
    assert!(zero.table().iter().all(|&y| y == 0));

    assert!(!f.is_self_dual());
    assert!(identity1().is_self_dual() && negation1().is_self_dual());
    assert_eq!(identity1().parity_class(), ParityClass::Even);
    assert_eq!(negation1().parity_class(), ParityClass::Odd);
    assert_eq!(f.parity_class(), ParityClass::Neither);
    assert_eq!(identity1().eosd_class(), EosdClass::EvenSelfDual);
    assert_eq!(negation1().eosd_class(), EosdClass::OddSelfDual);
    let esd4 = BooleanNetwork::parse_bn(&fixture("critical_esd4.bn")).unwrap();
    assert_eq!(esd4.eosd_class(), EosdClass::EvenSelfDual);

    assert!(!f.is_non_expansive());
    assert!(negation1().is_non_expansive());
    assert!(CircularForm::standard(4, "+-+-").unwrap().network().is_non_expansive());

    assert!(f.is_conjugate_bijective());
    assert!(!BooleanNetwork::identity(comps(2)).is_conjugate_bijective());
    assert!(!negation1().is_conjugate_bijective());
}

#[test]
fn fixed_points_of_tables() {
    let fps = |f: &BooleanNetwork| f.fixed_points().iter().map(|p| p.to_string()).collect::<Vec<_>>();
    assert_eq!(fps(&example()), ["000"]);
    assert_eq!(
        fps(&BooleanNetwork::parse_bn(&fixture("two_critical3.bn")).unwrap()),
        ["000", "111"]
    );
    assert!(fps(&BooleanNetwork::parse_bn(&fixture("zero_critical3.bn")).unwrap()).is_empty());
}

#[test]
fn output_transforms() {
    let v = comps(1);
    assert_eq!(identity1().xor_output(&v.full_set()).unwrap(), negation1());
    let f = example();
    let w = f.components().clone();
    assert_eq!(f.xor_output(&w.empty_set()).unwrap(), f);
    assert_eq!(f.translate(&w.empty_set()).unwrap(), f);
    let i = w.set(&["1", "3"]).unwrap();
    assert_eq!(f.translate(&i).unwrap().translate(&i).unwrap(), f);
    let circ = CircularForm::standard(3, "++-").unwrap().network();
    assert!(circ.xor_output(&i).unwrap().is_non_expansive());
    let two = BooleanNetwork::parse_bn(&fixture("two_critical3.bn")).unwrap();
    assert!(criticality(&two.translate(&i).unwrap()).unwrap().two_critical);
}

#[test]
fn enumeration_counts() {
    assert_eq!(network_count(1), Some(4));
    assert_eq!(network_count(2), Some(256));
    assert_eq!(random_network(3, 9).unwrap(), random_network(3, 9).unwrap());
    assert_ne!(random_network(3, 9).unwrap(), random_network(3, 10).unwrap());
}

#[test]
fn subnetwork_operations() {
    let f = example();
    let v = f.components().clone();
    assert_eq!(induced_subnetwork(&f, &SubnetworkSpec::whole(&v)).unwrap(), f);
    let zero = BooleanNetwork::constant(comps(3), 0);
    assert_eq!(
        immediate_subnetwork(&zero, "2", true).unwrap(),
        BooleanNetwork::constant(comps(3).select(0b101).unwrap(), 0)
    );
    assert_eq!(subnetwork_count(1), 1);
    assert_eq!(subnetwork_count(2), 5);
    assert_eq!(subnetwork_count(3), 19);
    assert_eq!(subnetworks(&f, false).count(), 18);

    assert!(find_eosd_subnetwork(&f).is_none());
    assert!(find_eosd_subnetwork(&negation1()).unwrap().is_whole());
    let esd4 = BooleanNetwork::parse_bn(&fixture("critical_esd4.bn")).unwrap();
    assert!(find_eosd_subnetwork(&esd4).unwrap().is_whole());

    let census = |f: &BooleanNetwork| {
        let c = all_subnetworks_fixed_point_census(f).unwrap();
        (c.min, c.max)
    };
    assert_eq!(census(&f), (1, 1));
    assert_eq!(census(&identity1()), (2, 2));
    let two = BooleanNetwork::parse_bn(&fixture("two_critical3.bn")).unwrap();
    let (min, max) = census(&two);
    assert!(min <= 1 && max == 2);

    let r = criticality(&two).unwrap();
    assert!(r.two_critical && !r.zero_critical);
    let zero3 = BooleanNetwork::parse_bn(&fixture("zero_critical3.bn")).unwrap();
    assert!(criticality(&zero3).unwrap().zero_critical);
    assert_eq!(criticality(&zero).unwrap().label(), "none");

    let spec = SubnetworkSpec::parse(&v, "I={2,3} z[1]=1").unwrap();
    assert_eq!(spec.to_string(), "I={2,3} z[1]=1");
}

#[test]
fn minimal_forbidden_sets_at_width_one() {
    let set = |p| minimal_forbidden_set(p, 1).unwrap();
    assert_eq!(set(ForbiddenProperty::ExactlyOne), [negation1(), identity1()]);
    assert_eq!(set(ForbiddenProperty::AtMostOne), [identity1()]);
    assert_eq!(set(ForbiddenProperty::AtLeastOne), [negation1()]);
}

#[test]
fn interaction_graphs() {
    let f = example();
    let v = f.components().clone();
    assert_eq!(discrete_derivative(&f, 0, 1, 0b100), -1);
    assert_eq!(discrete_derivative(&f, 1, 0, 0), 1);
    let g000 = local_interaction_graph(&f, &v.parse_point("000").unwrap()).unwrap();
    assert_eq!(g000.arc_count(), 3);
    assert!(g000.arcs().iter().all(|a| a.sign == Sign::Positive));
    let g111 = local_interaction_graph(&f, &v.parse_point("111").unwrap()).unwrap();
    assert!(g111.arcs().iter().all(|a| a.sign == Sign::Negative));
    let zero = BooleanNetwork::constant(comps(3), 5);
    assert!(global_interaction_graph(&zero).is_empty());

    let id = global_interaction_graph(&BooleanNetwork::identity(comps(3)));
    assert_eq!(id.arc_count(), 3);
    assert!((0..3).all(|i| id.has_arc(i, Sign::Positive, i)));

    let global = global_interaction_graph(&f);
    let expected = SignedDigraph::parse_sg(&fixture("and3.sg")).unwrap();
    assert_eq!(global, expected);
    let cycles = global.cycles();
    assert_eq!(cycles.len(), 5);
    assert_eq!(cycles.iter().filter(|c| c.is_positive()).count(), 1);

    let acyclic = SignedDigraph::parse_sg("vertices a b c\na + b\nb - c\na + c\n").unwrap();
    assert!(acyclic.cycles().is_empty());
    let loop1 = SignedDigraph::parse_sg("vertices 1\n1 + 1\n").unwrap();
    let c = loop1.cycles();
    assert_eq!(c.len(), 1);
    assert_eq!((c[0].len(), c[0].sign()), (1, Sign::Positive));
}

#[test]
fn chords_and_delocalizing_vertices() {
    let g = SignedDigraph::parse_sg(&fixture("and3.sg")).unwrap();
    let v = g.components().clone();
    let two = Cycle::from_labels(&v, &["1", "2"], &[Sign::Positive, Sign::Negative]).unwrap();
    assert!(g.is_chordless(&two).unwrap());
    assert_eq!(g.delocalizing_vertices(&two).unwrap().to_string(), "{3}");
    let three = Cycle::from_labels(&v, &["1", "2", "3"], &[Sign::Positive; 3]).unwrap();
    assert!(!g.is_chordless(&three).unwrap());
    assert!(g.delocalizing_vertices(&three).unwrap().is_empty());
    let isolated = three.to_digraph();
    assert!(isolated.is_chordless(&three).unwrap());
    assert!(isolated.delocalizing_vertices(&three).unwrap().is_empty());
}

#[test]
fn circular_forms() {
    let v1 = comps(1);
    let id = CircularForm::new(v1.clone(), vec![0], 0).unwrap().network();
    assert_eq!(id, identity1());
    assert_eq!(id.fixed_point_count(), 2);
    let neg = CircularForm::new(v1, vec![0], 1).unwrap().network();
    assert_eq!(neg, negation1());
    let swap = CircularForm::new(comps(2), vec![1, 0], 0).unwrap().network();
    let fps: Vec<String> = swap.fixed_points().iter().map(|p| p.to_string()).collect();
    assert_eq!(fps, ["00", "11"]);
    assert_eq!(detect_circular(&negation1()).unwrap().1, Sign::Negative);
    let esd4 = BooleanNetwork::parse_bn(&fixture("critical_esd4.bn")).unwrap();
    assert!(detect_circular(&esd4).is_none());
    assert!(detect_circular(&example()).is_none());
}

#[test]
fn and_nets() {
    let g = SignedDigraph::parse_sg(&fixture("and3.sg")).unwrap();
    assert_eq!(and_net(&g).unwrap(), example());
    let empty = SignedDigraph::empty(comps(2));
    assert_eq!(and_net(&empty).unwrap(), BooleanNetwork::constant(comps(2), 0b11));
    let loop1 = SignedDigraph::parse_sg("vertices 1\n1 + 1\n").unwrap();
    assert_eq!(and_net(&loop1).unwrap(), identity1());
    let both = SignedDigraph::parse_sg("vertices 1 2\n1 + 2\n1 - 2\n").unwrap();
    assert!(and_net(&both).is_err());
}

#[test]
fn local_cycle_conditions() {
    let f = example();
    assert!(!shih_dong_condition(&f));
    assert!(counting_condition(&f, CycleFilter::All));
    let c = BooleanNetwork::constant(comps(3), 3);
    assert!(shih_dong_condition(&c) && counting_condition(&c, CycleFilter::All));
}

#[test]
fn dynamics_examples() {
    let f = example();
    let gamma = asynchronous_state_graph(&f).unwrap();
    assert_eq!(gamma.arc_count(), 12);
    assert_eq!(gamma.successors(0).count(), 0);
    assert_eq!(gamma.successors(0b111).count(), 3);
    assert_eq!(
        asynchronous_state_graph(&BooleanNetwork::identity(comps(3)))
            .unwrap()
            .arc_count(),
        0
    );
    let neg = asynchronous_state_graph(&negation1()).unwrap();
    assert_eq!(neg.arcs().collect::<Vec<_>>(), [(0, 1), (1, 0)]);

    let show = |f: &BooleanNetwork| attractors(f).unwrap().iter().map(|a| a.to_string()).collect::<Vec<_>>();
    assert_eq!(show(&f), ["{000}"]);
    let two = BooleanNetwork::parse_bn(&fixture("two_critical3.bn")).unwrap();
    assert_eq!(show(&two), ["{000}", "{111}"]);
    assert_eq!(show(&negation1()), ["{0,1}"]);
    assert!(attractors(&negation1()).unwrap()[0].is_cyclic());

    assert!(weak_convergence(&f).unwrap());
    assert!(!weak_convergence(&negation1()).unwrap());
    assert!(!weak_convergence(&two).unwrap());
    assert!(!strong_convergence(&f).unwrap());
    assert!(strong_convergence(&BooleanNetwork::constant(comps(3), 6)).unwrap());
    assert!(!strong_convergence(&negation1()).unwrap());
}

#[test]
fn theorem_examples() {
    assert_eq!(check(TheoremId::MainEosd, &example()).unwrap(), Verdict::Confirmed);
    assert_eq!(check(TheoremId::ShihDong, &example()).unwrap(), Verdict::Vacuous);
    assert_eq!(
        check(TheoremId::Robert, &BooleanNetwork::constant(comps(3), 0)).unwrap(),
        Verdict::Confirmed
    );
    let r = sweep(TheoremId::Andnet2Critical, &Generator::AndNets { n: 3 }, 0).unwrap();
    assert_eq!((r.candidates, r.counterexamples), (19_683, 0));
    let r = sweep(TheoremId::MainEosd, &Generator::Exhaustive { n: 2 }, 0).unwrap();
    assert_eq!((r.candidates, r.counterexamples), (256, 0));
    let wide = BooleanNetwork::identity(comps(9));
    assert!(check(TheoremId::Robert, &wide).unwrap_err().is_cap());
}
