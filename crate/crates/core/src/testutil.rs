use crate::hypercube::Components;
use crate::network::BooleanNetwork;

macro_rules! fixture {
    ($name:literal) => {
        include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/", $name))
    };
}

pub fn comps(n: usize) -> Components {
    Components::range(n).unwrap()
}

pub fn and3() -> BooleanNetwork {
    BooleanNetwork::parse_bn(fixture!("and3.bn")).unwrap()
}

pub fn two_critical3() -> BooleanNetwork {
    BooleanNetwork::parse_bn(fixture!("two_critical3.bn")).unwrap()
}

pub fn zero_critical3() -> BooleanNetwork {
    BooleanNetwork::parse_bn(fixture!("zero_critical3.bn")).unwrap()
}

pub fn critical_esd4() -> BooleanNetwork {
    BooleanNetwork::parse_bn(fixture!("critical_esd4.bn")).unwrap()
}

pub fn and3_sg() -> &'static str {
    fixture!("and3.sg")
}

#[test]
fn three_cycle_fixture_matches_formula() {
    // f1 = x3 ∧ ¬x2, f2 = x1 ∧ ¬x3, f3 = x2 ∧ ¬x1
    let b = |x: u32, k: u32| x >> k & 1;
    let f = BooleanNetwork::from_fn(comps(3), |x| {
        (b(x, 2) & !b(x, 1) & 1) | (b(x, 0) & !b(x, 2) & 1) << 1 | (b(x, 1) & !b(x, 0) & 1) << 2
    });
    assert_eq!(and3(), f);
}
