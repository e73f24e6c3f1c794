//! Machine-checkable theorem instances, sweep harnesses and open-question searches.
//!
//! Each statement binds a hypothesis and a conclusion over one candidate. Two-sided
//! statements (equivalences) take "either side holds" as hypothesis and "both sides
//! agree" as conclusion, so they are vacuous only when neither side holds.

mod facts;
mod sweep;

use std::fmt;
use std::str::FromStr;

pub use facts::{CircularSub, Facts};
pub use sweep::{
    open_question_search, sweep, sweep_many, Candidate, Counterexample, Generator, Subject, SweepReport, REPORT_HEADER,
};

use crate::dynamics::StateGraph;
use crate::error::{Error, Result};
use crate::hypercube::bits;
use crate::hypercube::{neighbor_set, PointSet};
use crate::network::{BooleanNetwork, EosdClass, ParityClass};
use crate::siggraph::{local_interaction_graph_code, ChordHost, CountingCondition, CycleFilter, Sign};

/// Largest width accepted by [`check`].
pub const MAX_CHECK_WIDTH: usize = 8;

macro_rules! theorem_ids {
    ($($variant:ident => $name:literal : $statement:literal,)*) => {
        /// Identifier of a catalogued statement.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum TheoremId {
            $($variant,)*
        }

        impl TheoremId {
            pub const ALL: &'static [TheoremId] = &[$(TheoremId::$variant,)*];

            pub fn name(self) -> &'static str {
                match self {
                    $(TheoremId::$variant => $name,)*
                }
            }

            /// One-line statement of hypothesis and conclusion.
            pub fn statement(self) -> &'static str {
                match self {
                    $(TheoremId::$variant => $statement,)*
                }
            }
        }
    };
}

theorem_ids! {
    Robert => "ROBERT":
        "G(f) acyclic => exactly one fixed point",
    AracenaPos => "ARACENA_POS":
        "G(f) strongly connected with an arc and no negative cycle => at least two fixed points",
    AracenaNeg => "ARACENA_NEG":
        "G(f) strongly connected with an arc and no positive cycle => no fixed point",
    DichotomyUnique => "DICHOTOMY_UNIQUE":
        "G(f) has no positive cycle => at most one fixed point",
    DichotomyExist => "DICHOTOMY_EXIST":
        "G(f) has no negative cycle => at least one fixed point",
    Richard2010 => "RICHARD2010":
        "G(f) has no negative cycle => no cyclic attractor",
    ShihDong => "SHIH_DONG":
        "every Gf(x) acyclic => exactly one fixed point",
    RemyRuetThieffry => "REMY_RUET_THIEFFRY":
        "no Gf(x) has a positive cycle => at most one fixed point",
    Richard2011 => "RICHARD2011":
        "non-expansive and no Gf(x) has a negative cycle => at least one fixed point",
    Richard2011Dynamics => "RICHARD2011_DYNAMICS":
        "non-expansive and no Gf(x) has a negative cycle => no cyclic attractor",
    MainEosd => "MAIN_EOSD":
        "no even- or odd-self-dual subnetwork => conjugate is a bijection",
    CorEosdEquivalence => "COR_EOSD_EQUIVALENCE":
        "no EOSD subnetwork <=> every subnetwork has a bijective conjugate <=> every subnetwork has exactly one fixed point",
    CorCounting => "COR_COUNTING":
        "for all k, at most 2^k-1 points x with a cycle of length <= k in Gf(x) => exactly one fixed point",
    CorGeodesic => "COR_GEODESIC":
        "no EOSD subnetwork => unique fixed point reachable from every state by a geodesic path",
    ThmCircularEosd => "THM_CIRCULAR_EOSD":
        "positive-circular <=> even-self-dual and non-expansive; negative-circular <=> odd-self-dual and non-expansive",
    ThmCriticalNonexp => "THM_CRITICAL_NONEXP":
        "positive-circular <=> 2-critical and non-expansive; negative-circular <=> 0-critical and non-expansive",
    CorNonexpUnique => "COR_NONEXP_UNIQUE":
        "non-expansive => (every subnetwork has exactly one fixed point <=> no circular subnetwork)",
    CorNonexpDichotomy => "COR_NONEXP_DICHOTOMY":
        "non-expansive => (every subnetwork has <= 1 fixed point <=> no positive-circular subnetwork) and (>= 1 <=> no negative-circular subnetwork)",
    CorCountingSigned => "COR_COUNTING_SIGNED":
        "non-expansive and, for all k, at most 2^k-1 points x with a chordless positive (negative) cycle of length k in Gf(x) => at most (least) one fixed point",
    Andnet2Critical => "ANDNET_2CRITICAL":
        "positive-circular <=> 2-critical and-net",
    AndnetEosdCircular => "ANDNET_EOSD_CIRCULAR":
        "positive-circular <=> even-self-dual and-net; negative-circular <=> odd-self-dual and-net",
    AndnetNoCircular => "ANDNET_NO_CIRCULAR":
        "and-net => (every subnetwork has exactly one fixed point <=> no circular subnetwork) and (<= 1 <=> no positive-circular subnetwork)",
    AndnetCounting => "ANDNET_COUNTING":
        "and-net and, for all k, at most 2^k-1 points x with a chordless positive cycle of length k in Gf(x) => at most one fixed point",
    AndnetLocalCycles => "ANDNET_LOCAL_CYCLES":
        "and-net => a cycle occurs in some Gf(x) <=> it is a cycle of G(f) without delocalizing vertex",
    AndnetCircularSubnetwork => "ANDNET_CIRCULAR_SUBNETWORK":
        "and-net => f has a circular subnetwork with graph C <=> C is a cycle of G(f) without chord and without delocalizing vertex",
    AndnetChordless => "ANDNET_CHORDLESS":
        "and-net => (every subnetwork has exactly one fixed point <=> every chordless cycle of G(f) has a delocalizing vertex) and (<= 1 <=> same for chordless positive cycles)",
    PropLocalCircular => "PROP_LOCAL_CIRCULAR":
        "a cycle C of Gf(x) on I without chord in G(f) => the subnetwork induced by x outside I is circular with graph C",
    LocalRigidity => "LOCAL_RIGIDITY":
        "G(f) has in-degree at most one => Gf(x) = G(f) for every x",
    Lemma1Hypercube => "LEMMA1_HYPERCUBE":
        "X non-empty, disjoint from N(X) and |X| >= |N(X)| => X is the even or the odd points",
    PropOddOutdegree => "PROP_ODD_OUTDEGREE":
        "f even or odd => every vertex of every Gf(x) has odd out-degree",
    PropSubgraph => "PROP_SUBGRAPH":
        "subnetwork h on I induced by z: Gh(x|I) is the subgraph of Gf(x) induced by I, and G(h) is a subgraph of G(f)",
    PropSubdynamics => "PROP_SUBDYNAMICS":
        "subnetwork h on I induced by z: Gamma(h) is the subgraph of Gamma(f) induced by the subcube of z, projected onto I",
    PropCriticalDynamics => "PROP_CRITICAL_DYNAMICS":
        "multiple attractors => a 2-critical subnetwork; non-expansive with a cyclic attractor => no fixed point and a 0-critical subnetwork",
    PropMinimalForbidden => "PROP_MINIMAL_FORBIDDEN":
        "critical for 'some subnetwork has 0 or >= 2 fixed points' <=> critical even- or odd-self-dual",
    LemmaXorOutput => "LEMMA_XOR_OUTPUT":
        "f'(x) = f(x) xor e_I keeps non-expansiveness, self-duality, being even or odd, and every |Gf(x)|",
    LemmaTranslate => "LEMMA_TRANSLATE":
        "f'(x) = f(x xor e_I) xor e_I keeps non-expansiveness, 2- and 0-criticality, and |G(f)|",
}

impl TheoremId {
    /// True for the statement about point sets rather than networks.
    pub fn is_point_set(self) -> bool {
        self == TheoremId::Lemma1Hypercube
    }

    /// The statements checked exhaustively at small widths by the acceptance suite.
    pub const CORE_SET: &'static [TheoremId] = &[
        TheoremId::MainEosd,
        TheoremId::CorEosdEquivalence,
        TheoremId::Robert,
        TheoremId::DichotomyUnique,
        TheoremId::DichotomyExist,
        TheoremId::ShihDong,
        TheoremId::RemyRuetThieffry,
        TheoremId::Richard2010,
        TheoremId::Richard2011,
        TheoremId::CorCounting,
        TheoremId::CorGeodesic,
        TheoremId::ThmCircularEosd,
        TheoremId::ThmCriticalNonexp,
        TheoremId::PropOddOutdegree,
        TheoremId::PropSubgraph,
        TheoremId::PropSubdynamics,
    ];
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .iter()
            .copied()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Usage(format!("unknown theorem `{s}`")))
    }
}

/// Open questions searched for counterexamples; a hit is a discovery, not a failure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OpenQuestion {
    /// No Gf(x) has a negative cycle => at least one fixed point?
    NegativeLocalCycles,
    /// Every 0-critical and-net is negative-circular?
    ZeroCriticalAndNet,
}

impl OpenQuestion {
    pub const ALL: &'static [OpenQuestion] = &[OpenQuestion::NegativeLocalCycles, OpenQuestion::ZeroCriticalAndNet];

    pub fn name(self) -> &'static str {
        match self {
            OpenQuestion::NegativeLocalCycles => "Q1_NEG_LOCAL_CYCLES",
            OpenQuestion::ZeroCriticalAndNet => "Q2_0CRITICAL_ANDNET",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            OpenQuestion::NegativeLocalCycles => "no Gf(x) has a negative cycle => at least one fixed point?",
            OpenQuestion::ZeroCriticalAndNet => "0-critical and-net => negative-circular?",
        }
    }
}

impl fmt::Display for OpenQuestion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OpenQuestion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let q = s.to_ascii_uppercase();
        OpenQuestion::ALL
            .iter()
            .copied()
            .find(|o| o.name() == q || o.name().starts_with(&format!("{q}_")))
            .ok_or_else(|| Error::Usage(format!("unknown open question `{s}`")))
    }
}

/// Outcome of one statement on one candidate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// The hypothesis fails.
    Vacuous,
    /// Hypothesis and conclusion hold.
    Confirmed,
    /// The hypothesis holds and the conclusion fails; carries a replayable payload.
    Counterexample(String),
}

impl Verdict {
    pub fn is_counterexample(&self) -> bool {
        matches!(self, Verdict::Counterexample(_))
    }
}

/// Raw hypothesis/conclusion pair, plus the weaker as-stated conclusion where one exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Evaluation {
    pub hypothesis: bool,
    pub conclusion: bool,
    pub as_stated: Option<bool>,
}

impl Evaluation {
    fn implication(hypothesis: bool, conclusion: impl FnOnce() -> bool) -> Self {
        Evaluation {
            hypothesis,
            conclusion: !hypothesis || conclusion(),
            as_stated: None,
        }
    }

    /// Each pair `(left, right)` is one equivalence to be checked.
    fn equivalences(pairs: &[(bool, bool)]) -> Self {
        Evaluation {
            hypothesis: pairs.iter().any(|&(a, b)| a || b),
            conclusion: pairs.iter().all(|&(a, b)| a == b),
            as_stated: None,
        }
    }

    pub fn verdict(&self, payload: impl FnOnce() -> String) -> Verdict {
        match (self.hypothesis, self.conclusion) {
            (false, _) => Verdict::Vacuous,
            (true, true) => Verdict::Confirmed,
            (true, false) => Verdict::Counterexample(payload()),
        }
    }
}

fn ensure_width(f: &BooleanNetwork) -> Result<()> {
    if f.width() > MAX_CHECK_WIDTH {
        return Err(Error::WidthCap {
            width: f.width(),
            cap: MAX_CHECK_WIDTH,
            what: "theorem checks",
        });
    }
    Ok(())
}

/// Evaluates `id` on `f`.
pub fn check(id: TheoremId, f: &BooleanNetwork) -> Result<Verdict> {
    ensure_width(f)?;
    let facts = Facts::new(f);
    Ok(evaluate(id, &facts)?.verdict(|| f.to_bn()))
}

/// Evaluates the point-set statement on `set`.
pub fn check_point_set(id: TheoremId, set: &PointSet) -> Result<Verdict> {
    Ok(evaluate_point_set(id, set)?.verdict(|| format!("points {set}\n")))
}

pub fn evaluate_point_set(id: TheoremId, set: &PointSet) -> Result<Evaluation> {
    if !id.is_point_set() {
        return Err(Error::Usage(format!("{id} is a statement about networks")));
    }
    let n = set.components().len();
    if n > crate::hypercube::MAX_WIDTH {
        return Err(Error::WidthCap {
            width: n,
            cap: crate::hypercube::MAX_WIDTH,
            what: "point sets",
        });
    }
    let nb = neighbor_set(set);
    let hypothesis = !set.is_empty() && set.is_disjoint(&nb) && set.len() >= nb.len();
    Ok(Evaluation::implication(hypothesis, || {
        *set == PointSet::even_points(set.components()) || *set == PointSet::odd_points(set.components())
    }))
}

fn no_local_cycle(facts: &Facts, sign: Option<Sign>) -> bool {
    facts.locals().iter().all(|g| match sign {
        None => g.is_acyclic(),
        Some(Sign::Negative) => !g.has_negative_cycle(),
        Some(Sign::Positive) => !g.has_positive_cycle(),
    })
}

fn signed_counting(sign: Sign) -> CountingCondition {
    CountingCondition {
        filter: match sign {
            Sign::Positive => CycleFilter::PositiveChordless,
            Sign::Negative => CycleFilter::NegativeChordless,
        },
        host: ChordHost::Local,
        exact_length: true,
    }
}

fn has_cyclic_attractor(facts: &Facts) -> bool {
    facts.attractors().iter().any(|a| a.is_cyclic())
}

/// Evaluates a network statement with shared cached facts.
pub fn evaluate(id: TheoremId, facts: &Facts) -> Result<Evaluation> {
    use TheoremId::*;
    let f = facts.f;
    ensure_width(f)?;
    let fp = || facts.fixed_point_count();
    let eval = match id {
        Robert => Evaluation::implication(facts.global().is_acyclic(), || fp() == 1),
        AracenaPos => {
            let g = facts.global();
            Evaluation::implication(g.is_strongly_connected() && !g.has_negative_cycle(), || fp() >= 2)
        }
        AracenaNeg => {
            let g = facts.global();
            Evaluation::implication(g.is_strongly_connected() && !g.has_positive_cycle(), || fp() == 0)
        }
        DichotomyUnique => {
            let hyp = !facts.global().has_positive_cycle();
            let mut e = Evaluation::implication(hyp, || fp() <= 1);
            e.as_stated = Some(!hyp || fp() <= 2);
            e
        }
        DichotomyExist => Evaluation::implication(!facts.global().has_negative_cycle(), || fp() >= 1),
        Richard2010 => Evaluation::implication(!facts.global().has_negative_cycle(), || !has_cyclic_attractor(facts)),
        ShihDong => Evaluation::implication(no_local_cycle(facts, None), || fp() == 1),
        RemyRuetThieffry => Evaluation::implication(no_local_cycle(facts, Some(Sign::Positive)), || fp() <= 1),
        Richard2011 => Evaluation::implication(
            facts.non_expansive() && no_local_cycle(facts, Some(Sign::Negative)),
            || fp() >= 1,
        ),
        Richard2011Dynamics => Evaluation::implication(
            facts.non_expansive() && no_local_cycle(facts, Some(Sign::Negative)),
            || !has_cyclic_attractor(facts),
        ),
        MainEosd => Evaluation::implication(!facts.has_eosd_subnetwork(), || f.is_conjugate_bijective()),
        CorEosdEquivalence => {
            let no_eosd = !facts.has_eosd_subnetwork();
            let bijective = facts.subnetworks().iter().all(|(_, h)| h.is_conjugate_bijective());
            let unique = facts.all_subnetworks(|c| c == 1);
            Evaluation::equivalences(&[(no_eosd, bijective), (bijective, unique)])
        }
        CorCounting => Evaluation::implication(CountingCondition::new(CycleFilter::All).holds(f), || fp() == 1),
        CorGeodesic => Evaluation::implication(!facts.has_eosd_subnetwork(), || facts.weak_convergence()),
        ThmCircularEosd => {
            let ne = facts.non_expansive();
            let class = facts.eosd();
            Evaluation::equivalences(&[
                (
                    facts.is_circular_of(Sign::Positive),
                    class == EosdClass::EvenSelfDual && ne,
                ),
                (
                    facts.is_circular_of(Sign::Negative),
                    class == EosdClass::OddSelfDual && ne,
                ),
            ])
        }
        ThmCriticalNonexp => {
            let ne = facts.non_expansive();
            let crit = facts.criticality();
            Evaluation::equivalences(&[
                (facts.is_circular_of(Sign::Positive), crit.two_critical && ne),
                (facts.is_circular_of(Sign::Negative), crit.zero_critical && ne),
            ])
        }
        CorNonexpUnique => Evaluation::implication(facts.non_expansive(), || {
            facts.all_subnetworks(|c| c == 1) == !facts.has_circular_subnetwork(None)
        }),
        CorNonexpDichotomy => Evaluation::implication(facts.non_expansive(), || {
            facts.all_subnetworks(|c| c <= 1) == !facts.has_circular_subnetwork(Some(Sign::Positive))
                && facts.all_subnetworks(|c| c >= 1) == !facts.has_circular_subnetwork(Some(Sign::Negative))
        }),
        CorCountingSigned => {
            let ne = facts.non_expansive();
            let pos = ne && signed_counting(Sign::Positive).holds(f);
            let neg = ne && signed_counting(Sign::Negative).holds(f);
            Evaluation::implication(pos || neg, || (!pos || fp() <= 1) && (!neg || fp() >= 1))
        }
        Andnet2Critical => Evaluation::equivalences(&[(
            facts.is_circular_of(Sign::Positive),
            facts.is_and_net() && facts.criticality().two_critical,
        )]),
        AndnetEosdCircular => {
            let and = facts.is_and_net();
            let class = facts.eosd();
            Evaluation::equivalences(&[
                (
                    facts.is_circular_of(Sign::Positive),
                    and && class == EosdClass::EvenSelfDual,
                ),
                (
                    facts.is_circular_of(Sign::Negative),
                    and && class == EosdClass::OddSelfDual,
                ),
            ])
        }
        AndnetNoCircular => Evaluation::implication(facts.is_and_net(), || {
            facts.all_subnetworks(|c| c == 1) == !facts.has_circular_subnetwork(None)
                && facts.all_subnetworks(|c| c <= 1) == !facts.has_circular_subnetwork(Some(Sign::Positive))
        }),
        AndnetCounting => {
            Evaluation::implication(facts.is_and_net() && signed_counting(Sign::Positive).holds(f), || {
                fp() <= 1
            })
        }
        AndnetLocalCycles => Evaluation::implication(facts.is_and_net(), || {
            let g = facts.global();
            let expected: std::collections::BTreeSet<_> = facts
                .global_cycles()
                .iter()
                .filter(|c| g.delocalizing_vertices(c).is_ok_and(|d| d.is_empty()))
                .cloned()
                .collect();
            facts.local_cycles() == expected
        }),
        AndnetCircularSubnetwork => Evaluation::implication(facts.is_and_net(), || {
            let g = facts.global();
            let expected: std::collections::BTreeSet<_> = facts
                .global_cycles()
                .iter()
                .filter(|c| {
                    g.is_chordless(c).unwrap_or(false) && g.delocalizing_vertices(c).is_ok_and(|d| d.is_empty())
                })
                .cloned()
                .collect();
            let found: std::collections::BTreeSet<_> =
                facts.circular_subnetworks().iter().map(|c| c.cycle.clone()).collect();
            found == expected
        }),
        AndnetChordless => Evaluation::implication(facts.is_and_net(), || {
            let g = facts.global();
            let all_delocalized = |positive_only: bool| {
                facts.global_cycles().iter().all(|c| {
                    (positive_only && !c.is_positive())
                        || !g.is_chordless(c).unwrap_or(false)
                        || g.delocalizing_vertices(c).is_ok_and(|d| !d.is_empty())
                })
            };
            facts.all_subnetworks(|c| c == 1) == all_delocalized(false)
                && facts.all_subnetworks(|c| c <= 1) == all_delocalized(true)
        }),
        PropLocalCircular => {
            let g = facts.global();
            let mut cases = Vec::new();
            for (x, local) in facts.locals().iter().enumerate() {
                for c in local.cycles() {
                    if g.is_chordless(&c).unwrap_or(false) {
                        cases.push((x as u32, c));
                    }
                }
            }
            Evaluation::implication(!cases.is_empty(), || {
                cases.iter().all(|(x, c)| {
                    let spec = crate::subnetwork::SubnetworkSpec::from_codes(f.components(), c.vertex_mask(), *x)
                        .expect("cycle vertices are non-empty");
                    facts
                        .circular_subnetworks()
                        .iter()
                        .any(|s| s.spec == spec && s.cycle == *c)
                })
            })
        }
        LocalRigidity => Evaluation::implication(facts.global().max_in_degree() <= 1, || {
            facts.locals().iter().all(|l| l == facts.global())
        }),
        Lemma1Hypercube => {
            return Err(Error::Usage(format!("{id} is a statement about point sets")));
        }
        PropOddOutdegree => Evaluation::implication(facts.parity() != ParityClass::Neither, || {
            facts
                .locals()
                .iter()
                .all(|g| (0..g.vertex_count()).all(|j| g.out_mask(j).count_ones() % 2 == 1))
        }),
        PropSubgraph => Evaluation::implication(true, || {
            let global = facts.global();
            facts.subnetworks().iter().all(|(spec, h)| {
                let free = spec.free_mask();
                let gh = crate::siggraph::global_interaction_graph(h);
                let contained = gh.is_subgraph_of(&global.induced_subgraph(free).expect("non-empty"));
                contained
                    && (0..1u32 << h.width()).all(|inner| {
                        let x = spec.embed(inner);
                        local_interaction_graph_code(h, inner)
                            == facts.locals()[x as usize].induced_subgraph(free).expect("non-empty")
                    })
            })
        }),
        PropSubdynamics => Evaluation::implication(true, || {
            let gamma = facts.state_graph();
            facts.subnetworks().iter().all(|(spec, h)| {
                let sub = StateGraph::new(h).expect("subnetwork is narrower");
                sub.arcs().collect::<Vec<_>>() == gamma.projected_arcs(spec)
            })
        }),
        PropCriticalDynamics => {
            let multiple = facts.attractors().len() >= 2;
            let cyclic_ne = facts.non_expansive() && has_cyclic_attractor(facts);
            Evaluation::implication(multiple || cyclic_ne, || {
                let has = |pick: fn(&crate::subnetwork::CriticalityReport) -> bool| {
                    facts
                        .subnetworks()
                        .iter()
                        .any(|(_, h)| crate::subnetwork::criticality(h).is_ok_and(|r| pick(&r)))
                };
                (!multiple || has(|r| r.two_critical)) && (!cyclic_ne || (fp() == 0 && has(|r| r.zero_critical)))
            })
        }
        PropMinimalForbidden => {
            let profile = facts.profile();
            let critical =
                crate::subnetwork::is_critical_for_negation(crate::subnetwork::ForbiddenProperty::ExactlyOne, profile);
            Evaluation::equivalences(&[(critical, facts.is_critical_eosd())])
        }
        LemmaXorOutput => Evaluation::implication(true, || {
            let ne = facts.non_expansive();
            let sd = f.is_self_dual();
            let parity = facts.parity() != ParityClass::Neither;
            let comps = f.components();
            (0..=comps.full_mask()).all(|mask| {
                let set = comps.set_from_mask(mask).expect("mask within width");
                let g = f.xor_output(&set).expect("same components");
                (!ne || g.is_non_expansive())
                    && (!sd || g.is_self_dual())
                    && (!parity || g.parity_class() != ParityClass::Neither)
                    && (0..1u32 << f.width()).all(|x| {
                        let a = &facts.locals()[x as usize];
                        let b = local_interaction_graph_code(&g, x);
                        (0..a.vertex_count()).all(|j| a.out_mask(j) == b.out_mask(j))
                    })
            })
        }),
        LemmaTranslate => Evaluation::implication(true, || {
            let ne = facts.non_expansive();
            let crit = facts.criticality();
            let comps = f.components();
            let global = facts.global();
            (0..=comps.full_mask()).all(|mask| {
                let set = comps.set_from_mask(mask).expect("mask within width");
                let g = f.translate(&set).expect("same components");
                let gc = crate::subnetwork::criticality(&g).expect("same width");
                let gg = crate::siggraph::global_interaction_graph(&g);
                (!ne || g.is_non_expansive())
                    && (!crit.two_critical || gc.two_critical)
                    && (!crit.zero_critical || gc.zero_critical)
                    && bits(comps.full_mask()).all(|j| gg.out_mask(j) == global.out_mask(j))
            })
        }),
    };
    Ok(eval)
}

/// Evaluates an open question on `f`: the hypothesis and the conjectured conclusion.
pub fn evaluate_question(q: OpenQuestion, facts: &Facts) -> Result<Evaluation> {
    ensure_width(facts.f)?;
    Ok(match q {
        OpenQuestion::NegativeLocalCycles => {
            Evaluation::implication(no_local_cycle(facts, Some(Sign::Negative)), || {
                facts.fixed_point_count() >= 1
            })
        }
        OpenQuestion::ZeroCriticalAndNet => {
            Evaluation::implication(facts.is_and_net() && facts.criticality().zero_critical, || {
                facts.is_circular_of(Sign::Negative)
            })
        }
    })
}
