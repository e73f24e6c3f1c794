//! Lazily computed properties of one network, shared by the theorem predicates.

use std::cell::OnceCell;
use std::collections::BTreeSet;

use crate::dynamics::{attractors_of, weak_convergence_of, Attractor, StateGraph};
use crate::network::{BooleanNetwork, EosdClass, ParityClass};
use crate::siggraph::{
    detect_circular, global_interaction_graph, is_and_net, local_interaction_graph_code, Cycle, Sign, SignedDigraph,
};
use crate::subnetwork::{subnetworks, CriticalityReport, FixedPointProfile, SubnetworkSpec};

/// A circular subnetwork together with its cycle, expressed in the parent's indices.
#[derive(Debug, Clone)]
pub struct CircularSub {
    pub spec: SubnetworkSpec,
    pub sign: Sign,
    pub cycle: Cycle,
}

pub struct Facts<'a> {
    pub f: &'a BooleanNetwork,
    global: OnceCell<SignedDigraph>,
    locals: OnceCell<Vec<SignedDigraph>>,
    fixed_points: OnceCell<usize>,
    profile: OnceCell<FixedPointProfile>,
    subs: OnceCell<Vec<(SubnetworkSpec, BooleanNetwork)>>,
    state_graph: OnceCell<StateGraph>,
    attractors: OnceCell<Vec<Attractor>>,
    circular_subs: OnceCell<Vec<CircularSub>>,
    global_cycles: OnceCell<Vec<Cycle>>,
    non_expansive: OnceCell<bool>,
    and_net: OnceCell<bool>,
    circular: OnceCell<Option<Sign>>,
}

impl<'a> Facts<'a> {
    pub fn new(f: &'a BooleanNetwork) -> Self {
        Facts {
            f,
            global: OnceCell::new(),
            locals: OnceCell::new(),
            fixed_points: OnceCell::new(),
            profile: OnceCell::new(),
            subs: OnceCell::new(),
            state_graph: OnceCell::new(),
            attractors: OnceCell::new(),
            circular_subs: OnceCell::new(),
            global_cycles: OnceCell::new(),
            non_expansive: OnceCell::new(),
            and_net: OnceCell::new(),
            circular: OnceCell::new(),
        }
    }

    pub fn width(&self) -> usize {
        self.f.width()
    }

    pub fn global(&self) -> &SignedDigraph {
        self.global.get_or_init(|| global_interaction_graph(self.f))
    }

    pub fn locals(&self) -> &[SignedDigraph] {
        self.locals.get_or_init(|| {
            (0..1u32 << self.f.width())
                .map(|x| local_interaction_graph_code(self.f, x))
                .collect()
        })
    }

    pub fn fixed_point_count(&self) -> usize {
        *self.fixed_points.get_or_init(|| self.f.fixed_point_count())
    }

    pub fn profile(&self) -> &FixedPointProfile {
        self.profile
            .get_or_init(|| FixedPointProfile::new(self.f).expect("width checked by caller"))
    }

    pub fn criticality(&self) -> CriticalityReport {
        CriticalityReport::from_profile(self.profile())
    }

    /// Every subnetwork, the network itself last.
    pub fn subnetworks(&self) -> &[(SubnetworkSpec, BooleanNetwork)] {
        self.subs.get_or_init(|| subnetworks(self.f, true).collect())
    }

    pub fn strict_subnetworks(&self) -> &[(SubnetworkSpec, BooleanNetwork)] {
        let all = self.subnetworks();
        &all[..all.len() - 1]
    }

    pub fn state_graph(&self) -> &StateGraph {
        self.state_graph
            .get_or_init(|| StateGraph::new(self.f).expect("width checked by caller"))
    }

    pub fn attractors(&self) -> &[Attractor] {
        self.attractors.get_or_init(|| attractors_of(self.state_graph()))
    }

    pub fn weak_convergence(&self) -> bool {
        weak_convergence_of(self.f, self.state_graph())
    }

    pub fn non_expansive(&self) -> bool {
        *self.non_expansive.get_or_init(|| self.f.is_non_expansive())
    }

    pub fn is_and_net(&self) -> bool {
        *self.and_net.get_or_init(|| is_and_net(self.f))
    }

    pub fn circular(&self) -> Option<Sign> {
        *self.circular.get_or_init(|| detect_circular(self.f).map(|(_, s)| s))
    }

    pub fn is_circular_of(&self, sign: Sign) -> bool {
        self.circular() == Some(sign)
    }

    pub fn eosd(&self) -> EosdClass {
        self.f.eosd_class()
    }

    pub fn parity(&self) -> ParityClass {
        self.f.parity_class()
    }

    pub fn has_eosd_subnetwork(&self) -> bool {
        self.subnetworks()
            .iter()
            .any(|(_, h)| h.eosd_class() != EosdClass::Neither)
    }

    pub fn is_critical_eosd(&self) -> bool {
        self.eosd() != EosdClass::Neither
            && self
                .strict_subnetworks()
                .iter()
                .all(|(_, h)| h.eosd_class() == EosdClass::Neither)
    }

    pub fn circular_subnetworks(&self) -> &[CircularSub] {
        self.circular_subs.get_or_init(|| {
            let mut out = Vec::new();
            for (spec, h) in self.subnetworks() {
                if let Some((form, sign)) = detect_circular(h) {
                    // lift the cycle from the subnetwork's components back to f's indices
                    let free: Vec<usize> = crate::hypercube::bits(spec.free_mask()).collect();
                    let inner = form.cycle();
                    let vertices = inner.vertices().iter().map(|&v| free[v]).collect();
                    let cycle = Cycle::new(self.f.components(), vertices, inner.signs().to_vec())
                        .expect("lifted cycle is valid");
                    out.push(CircularSub {
                        spec: spec.clone(),
                        sign,
                        cycle,
                    });
                }
            }
            out
        })
    }

    pub fn has_circular_subnetwork(&self, sign: Option<Sign>) -> bool {
        self.circular_subnetworks()
            .iter()
            .any(|c| sign.is_none_or(|s| c.sign == s))
    }

    pub fn global_cycles(&self) -> &[Cycle] {
        self.global_cycles.get_or_init(|| self.global().cycles())
    }

    /// Distinct cycles occurring in at least one local interaction graph.
    pub fn local_cycles(&self) -> BTreeSet<Cycle> {
        self.locals().iter().flat_map(|g| g.cycles()).collect()
    }

    /// Every subnetwork has a fixed-point count accepted by `ok`.
    pub fn all_subnetworks(&self, ok: impl Fn(u32) -> bool) -> bool {
        let mut all = true;
        self.profile().for_each(true, |_, _, c| all &= ok(c));
        all
    }
}
