//! Acceptance suite: one PASS/FAIL line per criterion, each under a fixed time limit.
//!
//! Set `BOOLNET_DEEP=1` to add the full exhaustive width-3 sweep to criterion 6.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use boolnet::dynamics::{asynchronous_state_graph, strong_convergence, weak_convergence};
use boolnet::hypercube::{is_even, render_bits};
use boolnet::network::{network_from_index, MAX_ENUMERATION_WIDTH};
use boolnet::siggraph::{
    circular_family, circular_family_size, counting_condition, detect_circular, global_interaction_graph,
    local_interaction_graph_code, random_signed_digraph, shih_dong_condition, CycleFilter,
};
use boolnet::subnetwork::{
    criticality, find_eosd_subnetwork, is_critical_for_negation, FixedPointProfile, ForbiddenProperty,
};
use boolnet::theorems::{open_question_search, sweep_many, Generator, OpenQuestion, SweepReport, TheoremId};
use boolnet::{BooleanNetwork, Components, EosdClass, ParityClass, Sign, SignedDigraph};

type Outcome = Result<String, String>;

fn fixture(name: &str) -> BooleanNetwork {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "fixtures", name]
        .iter()
        .collect();
    BooleanNetwork::parse_bn(&std::fs::read_to_string(p).unwrap()).unwrap()
}

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn sg(arcs: &str) -> SignedDigraph {
    let mut text = String::from("vertices 1 2 3\n");
    for arc in arcs.split(',').filter(|a| !a.is_empty()) {
        let arc = arc.trim();
        text.push_str(&format!("{} {} {}\n", &arc[..1], &arc[1..2], &arc[2..]));
    }
    SignedDigraph::parse_sg(&text).unwrap()
}

fn theorem_reports(reports: &[SweepReport]) -> Result<String, String> {
    let mut failed = Vec::new();
    for r in reports {
        if !r.passed() {
            failed.push(r.render());
        }
    }
    ensure(failed.is_empty(), || failed.join("\n"))?;
    let total: u64 = reports.iter().map(|r| r.confirmed).sum();
    Ok(format!("{} theorems, {} confirmed instances", reports.len(), total))
}

fn criterion_1() -> Outcome {
    let f = fixture("and3.bn");
    let conj: Vec<String> = (0..8).map(|x| render_bits(f.eval_conjugate(x), 3)).collect();
    let by_text = |s: &str| f.components().parse_point(s).unwrap().code() as usize;
    let expected_conj = [
        ("000", "000"),
        ("001", "101"),
        ("010", "011"),
        ("011", "010"),
        ("100", "110"),
        ("101", "001"),
        ("110", "100"),
        ("111", "111"),
    ];
    for (x, y) in expected_conj {
        ensure(conj[by_text(x)] == y, || {
            format!("conjugate at {x}: {} != {y}", conj[by_text(x)])
        })?;
    }
    let fps: Vec<String> = f.fixed_points().iter().map(|p| p.to_string()).collect();
    ensure(fps == ["000"], || format!("fixed points {fps:?}"))?;
    ensure(find_eosd_subnetwork(&f).is_none(), || {
        "unexpected EOSD subnetwork".into()
    })?;
    ensure(f.is_conjugate_bijective(), || "conjugate not bijective".into())?;

    let locals = [
        ("000", "1+2,2+3,3+1"),
        ("001", "2-1,2+3,3+1"),
        ("010", "1+2,1-3,2+3"),
        ("011", "1-3,2-1,2+3"),
        ("100", "1+2,3-2,3+1"),
        ("101", "2-1,3-2,3+1"),
        ("110", "1+2,1-3,3-2"),
        ("111", "1-3,3-2,2-1"),
    ];
    for (x, arcs) in locals {
        let g = local_interaction_graph_code(&f, by_text(x) as u32);
        ensure(g == sg(arcs), || format!("Gf({x}) = {}", g.to_sg()))?;
    }
    let global = global_interaction_graph(&f);
    ensure(global == sg("1+2,2+3,3+1,1-3,3-2,2-1"), || {
        format!("G(f) = {}", global.to_sg())
    })?;

    let gamma = asynchronous_state_graph(&f).unwrap();
    let arcs: BTreeSet<(String, String)> = gamma
        .arcs()
        .map(|(x, y)| (f.components().point(x).to_string(), f.components().point(y).to_string()))
        .collect();
    let expected: BTreeSet<(String, String)> = [
        ("001", "101"),
        ("001", "000"),
        ("010", "000"),
        ("010", "011"),
        ("011", "001"),
        ("100", "000"),
        ("100", "110"),
        ("101", "100"),
        ("110", "010"),
        ("111", "011"),
        ("111", "101"),
        ("111", "110"),
    ]
    .iter()
    .map(|(a, b)| (a.to_string(), b.to_string()))
    .collect();
    ensure(arcs == expected, || format!("state graph arcs {arcs:?}"))?;
    ensure(weak_convergence(&f).unwrap(), || "weak convergence false".into())?;
    ensure(!strong_convergence(&f).unwrap(), || "strong convergence true".into())?;
    ensure(!shih_dong_condition(&f), || "Shih-Dong condition holds".into())?;
    ensure(counting_condition(&f, CycleFilter::All), || {
        "counting condition fails".into()
    })?;
    Ok("tables, graphs, dynamics and conditions match".into())
}

fn criterion_2() -> Outcome {
    let mut reports = Vec::new();
    let mut counts = Vec::new();
    for n in 1..=2 {
        let r = sweep_many(TheoremId::CORE_SET, &Generator::Exhaustive { n }, 0).map_err(|e| e.to_string())?;
        counts.push(r[0].candidates);
        reports.extend(r);
    }
    let dichotomy_stated = reports.iter().filter_map(|r| r.as_stated_failures).sum::<u64>();
    let summary = theorem_reports(&reports)?;
    Ok(format!(
        "{summary}; networks per width {counts:?}; as-stated dichotomy counterexamples {dichotomy_stated}"
    ))
}

fn criterion_3() -> Outcome {
    let mut confirmed = Vec::new();
    for n in 1..=4 {
        let r = sweep_many(&[TheoremId::Lemma1Hypercube], &Generator::Subsets { n }, 0).map_err(|e| e.to_string())?;
        theorem_reports(&r)?;
        ensure(r[0].confirmed == 2, || {
            format!("n={n}: {} sets meet the hypothesis", r[0].confirmed)
        })?;
        confirmed.push(r[0].candidates);
    }
    Ok(format!("subsets checked per width {confirmed:?}"))
}

fn criterion_4() -> Outcome {
    let ids = [
        TheoremId::Andnet2Critical,
        TheoremId::AndnetEosdCircular,
        TheoremId::AndnetCircularSubnetwork,
        TheoremId::AndnetChordless,
        TheoremId::AndnetNoCircular,
        TheoremId::AndnetLocalCycles,
        TheoremId::AndnetCounting,
        TheoremId::PropLocalCircular,
    ];
    let gen = Generator::AndNets { n: 3 };
    let reports = sweep_many(&ids, &gen, 0).map_err(|e| e.to_string())?;
    ensure(reports[0].candidates == 19_683, || {
        format!("{} candidates", reports[0].candidates)
    })?;
    let summary = theorem_reports(&reports)?;
    let q2 = open_question_search(OpenQuestion::ZeroCriticalAndNet, &gen, 0).map_err(|e| e.to_string())?;
    Ok(format!(
        "{summary} over {} digraphs; Q2 hypothesis met {} times, discoveries {}",
        q2.candidates,
        q2.confirmed + q2.counterexamples,
        q2.discoveries()
    ))
}

fn criterion_5() -> Outcome {
    let mut total = 0;
    for n in 1..=6 {
        let mut count = 0;
        for form in circular_family(n).unwrap() {
            count += 1;
            let f = form.network();
            let (found, sign) = detect_circular(&f).ok_or_else(|| format!("not detected: {f}"))?;
            ensure(found.network() == f, || format!("round trip differs for {f}"))?;
            ensure(found.predecessors() == form.predecessors(), || {
                format!("predecessors differ for {f}")
            })?;
            let positive = is_even(form.constant().code());
            ensure(sign == if positive { Sign::Positive } else { Sign::Negative }, || {
                format!("sign {sign} for constant {}", form.constant())
            })?;
            let expected_fp = if positive { 2 } else { 0 };
            ensure(f.fixed_point_count() == expected_fp, || {
                format!("{} fixed points for {f}", f.fixed_point_count())
            })?;
            let global = global_interaction_graph(&f);
            ensure(global == form.cycle().to_digraph(), || {
                format!("G(f) is not the cycle for {f}")
            })?;
            for x in 0..1u32 << n {
                ensure(local_interaction_graph_code(&f, x) == global, || {
                    format!("Gf({x}) != G(f) for {f}")
                })?;
            }
        }
        ensure(count == circular_family_size(n), || format!("{count} forms at n={n}"))?;
        total += count;
    }
    Ok(format!("{total} circular networks for n = 1..6"))
}

fn criterion_6() -> Outcome {
    let count = 100_000;
    let reports = sweep_many(
        TheoremId::CORE_SET,
        &Generator::Sample {
            n: 3,
            count,
            seed: 2024,
        },
        0,
    )
    .map_err(|e| e.to_string())?;
    let mut summary = theorem_reports(&reports)?;
    summary.push_str(&format!(" over {count} sampled width-3 networks"));
    if deep() {
        let r = sweep_many(
            TheoremId::CORE_SET,
            &Generator::Exhaustive {
                n: MAX_ENUMERATION_WIDTH,
            },
            0,
        )
        .map_err(|e| e.to_string())?;
        summary.push_str(&format!("; deep: {}", theorem_reports(&r)?));
    }
    let searches = [
        Generator::Exhaustive { n: 2 },
        Generator::Sample {
            n: 3,
            count: 1_000_000,
            seed: 1,
        },
        Generator::Sample {
            n: 4,
            count: 1_000_000,
            seed: 2,
        },
        Generator::RandomAndNets {
            n: 4,
            count: 100_000,
            seed: 3,
        },
        Generator::RandomAndNets {
            n: 5,
            count: 20_000,
            seed: 4,
        },
    ];
    let mut q1 = Vec::new();
    let mut discoveries = 0;
    for gen in &searches {
        let r = open_question_search(OpenQuestion::NegativeLocalCycles, gen, 0).map_err(|e| e.to_string())?;
        if r.discoveries() > 0 {
            println!("DISCOVERY Q1_NEG_LOCAL_CYCLES\n{}", r.render());
        }
        discoveries += r.discoveries();
        q1.push(format!("{} met {}", r.generator, r.confirmed + r.counterexamples));
    }
    Ok(format!("{summary}; Q1 discoveries {discoveries} ({})", q1.join(", ")))
}

fn brute_force_cycles(g: &SignedDigraph) -> Vec<(Vec<usize>, Vec<Sign>)> {
    fn extend(
        g: &SignedDigraph,
        subset: u32,
        path: &mut Vec<usize>,
        signs: &mut Vec<Sign>,
        out: &mut Vec<(Vec<usize>, Vec<Sign>)>,
    ) {
        let last = *path.last().unwrap();
        let used = path.iter().fold(0u32, |m, &v| m | 1 << v);
        let both = [Sign::Positive, Sign::Negative];
        if used == subset {
            for s in both {
                if g.has_arc(last, s, path[0]) {
                    signs.push(s);
                    out.push((path.clone(), signs.clone()));
                    signs.pop();
                }
            }
            return;
        }
        for v in 0..g.vertex_count() {
            if subset >> v & 1 == 1 && used >> v & 1 == 0 {
                for s in both {
                    if g.has_arc(last, s, v) {
                        path.push(v);
                        signs.push(s);
                        extend(g, subset, path, signs, out);
                        path.pop();
                        signs.pop();
                    }
                }
            }
        }
    }
    let mut out = Vec::new();
    for subset in 1..1u32 << g.vertex_count() {
        let start = subset.trailing_zeros() as usize;
        extend(g, subset, &mut vec![start], &mut Vec::new(), &mut out);
    }
    out.sort();
    out
}

fn johnson_cycles(g: &SignedDigraph) -> Vec<(Vec<usize>, Vec<Sign>)> {
    let mut out: Vec<_> = g
        .cycles()
        .iter()
        .map(|c| (c.vertices().to_vec(), c.signs().to_vec()))
        .collect();
    out.sort();
    out
}

fn criterion_7() -> Outcome {
    let mut graphs = 0u64;
    let mut cycles = 0usize;
    for n in 1..=3usize {
        let comps = Components::range(n).unwrap();
        let pairs = n * n;
        for index in 0..1u64 << (2 * pairs) {
            let mut g = SignedDigraph::empty(comps.clone());
            for p in 0..pairs {
                let (src, dst) = (p / n, p % n);
                if index >> (2 * p) & 1 == 1 {
                    g.add_arc(src, Sign::Positive, dst).unwrap();
                }
                if index >> (2 * p + 1) & 1 == 1 {
                    g.add_arc(src, Sign::Negative, dst).unwrap();
                }
            }
            let expected = brute_force_cycles(&g);
            ensure(johnson_cycles(&g) == expected, || format!("mismatch on\n{}", g.to_sg()))?;
            graphs += 1;
            cycles += expected.len();
        }
    }
    for seed in 0..10_000u64 {
        let n = 4 + (seed % 2) as usize;
        let g = random_signed_digraph(n, seed).unwrap();
        let expected = brute_force_cycles(&g);
        ensure(johnson_cycles(&g) == expected, || format!("mismatch on\n{}", g.to_sg()))?;
        graphs += 1;
        cycles += expected.len();
    }
    let f = fixture("and3.bn");
    let listed: Vec<String> = global_interaction_graph(&f)
        .cycles()
        .iter()
        .map(|c| c.to_string())
        .collect();
    let expected = ["1 + 2 - 1", "1 - 3 + 1", "2 + 3 - 2", "1 + 2 + 3 + 1", "1 - 3 - 2 - 1"];
    ensure(listed == expected, || format!("example cycles {listed:?}"))?;
    let signs: Vec<Sign> = global_interaction_graph(&f).cycles().iter().map(|c| c.sign()).collect();
    ensure(
        signs
            == [
                Sign::Negative,
                Sign::Negative,
                Sign::Negative,
                Sign::Positive,
                Sign::Negative,
            ],
        || format!("example cycle signs {signs:?}"),
    )?;
    Ok(format!(
        "{graphs} digraphs, {cycles} cycles agree with the brute-force oracle"
    ))
}

fn criterion_8() -> Outcome {
    let two = fixture("two_critical3.bn");
    let r = criticality(&two).unwrap();
    ensure(r.two_critical && two.parity_class() != ParityClass::Even, || {
        format!("first table: {} / {}", r.label(), two.parity_class())
    })?;
    let zero = fixture("zero_critical3.bn");
    let r = criticality(&zero).unwrap();
    ensure(r.zero_critical && zero.parity_class() != ParityClass::Odd, || {
        format!("second table: {} / {}", r.label(), zero.parity_class())
    })?;
    let esd = fixture("critical_esd4.bn");
    ensure(esd.eosd_class() == EosdClass::EvenSelfDual, || {
        format!("class {}", esd.eosd_class())
    })?;
    let profile = FixedPointProfile::new(&esd).unwrap();
    ensure(
        is_critical_for_negation(ForbiddenProperty::ExactlyOne, &profile),
        || "not critical".into(),
    )?;
    ensure(detect_circular(&esd).is_none(), || "detected as circular".into())?;
    Ok("2-critical not even, 0-critical not odd, critical even-self-dual not circular".into())
}

fn criterion_9() -> Outcome {
    let generators = [
        Generator::Sample {
            n: 3,
            count: 20_000,
            seed: 99,
        },
        Generator::NonExpansiveFiltered {
            n: 3,
            count: 50_000,
            seed: 5,
        },
        Generator::RandomAndNets {
            n: 4,
            count: 5_000,
            seed: 8,
        },
    ];
    let ids = [
        TheoremId::Robert,
        TheoremId::MainEosd,
        TheoremId::CorCountingSigned,
        TheoremId::DichotomyUnique,
    ];
    let mut runs = 0;
    for gen in &generators {
        let render = |jobs| -> Result<Vec<String>, String> {
            Ok(sweep_many(&ids, gen, jobs)
                .map_err(|e| e.to_string())?
                .iter()
                .map(|r| r.render())
                .collect())
        };
        let reference = render(1)?;
        for jobs in [1, 2, 3, 8] {
            ensure(render(jobs)? == reference, || {
                format!("{} differs at jobs={jobs}", gen.descriptor())
            })?;
            runs += 1;
        }
        let q = |jobs| open_question_search(OpenQuestion::NegativeLocalCycles, gen, jobs).map(|r| r.render());
        ensure(
            q(1).map_err(|e| e.to_string())? == q(4).map_err(|e| e.to_string())?,
            || format!("question report for {} differs", gen.descriptor()),
        )?;
    }
    let a = network_from_index(&Components::range(2).unwrap(), 12345);
    ensure(a == network_from_index(&Components::range(2).unwrap(), 12345), || {
        "indexing differs".into()
    })?;
    Ok(format!("{runs} repeated sweeps byte-identical across jobs 1, 2, 3, 8"))
}

fn deep() -> bool {
    std::env::var("BOOLNET_DEEP").is_ok_and(|v| v == "1")
}

type Criterion = (&'static str, Duration, fn() -> Outcome);

fn main() -> ExitCode {
    let sampled_limit = Duration::from_secs(if deep() { 3600 } else { 120 });
    let criteria: [Criterion; 9] = [
        ("worked example reproduced exactly", Duration::from_secs(1), criterion_1),
        (
            "exhaustive widths 1-2, core theorem set",
            Duration::from_secs(30),
            criterion_2,
        ),
        (
            "exhaustive point-set lemma, n <= 4",
            Duration::from_secs(5),
            criterion_3,
        ),
        (
            "and-net family, all 3-vertex simple digraphs",
            Duration::from_secs(60),
            criterion_4,
        ),
        ("circular family, n = 1..6", Duration::from_secs(10), criterion_5),
        ("sampled width 3 and Q1 search", sampled_limit, criterion_6),
        (
            "cycle enumeration against brute force",
            Duration::from_secs(60),
            criterion_7,
        ),
        ("criticality fixtures", Duration::from_secs(1), criterion_8),
        (
            "determinism across worker counts",
            Duration::from_secs(120),
            criterion_9,
        ),
    ];
    let mut failures = 0;
    for (k, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let (status, detail) = match outcome {
            Ok(_) if elapsed > *limit => ("FAIL", format!("exceeded {limit:?}")),
            Ok(d) => ("PASS", d),
            Err(e) => ("FAIL", e),
        };
        if status == "FAIL" {
            failures += 1;
        }
        println!(
            "{status} criterion {} ({name}) in {:.2}s, limit {}s: {detail}",
            k + 1,
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failures} criteria failed");
        ExitCode::FAILURE
    }
}
