//! Runs every acceptance criterion at its full bound and prints one line per
//! criterion. Exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use confluent::{AlgebraId, CheckConfig, CheckKind, Mode, RunReport, Status, Suite};

const ALGEBRAS: [AlgebraId; 4] = [AlgebraId::V, AlgebraId::III, AlgebraId::IIID7, AlgebraId::IIID8];

struct Outcome {
    checks: usize,
    inputs: usize,
    problems: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            checks: 0,
            inputs: 0,
            problems: Vec::new(),
        }
    }

    /// Folds in a report. Every check must pass, and identity checks must
    /// have been evaluated on at least one input.
    fn absorb(&mut self, report: &RunReport) {
        for c in &report.checks {
            self.checks += 1;
            self.inputs += c.items;
            if c.status != Status::Pass {
                self.problems.push(format!("{} failed", c.id));
            } else if c.kind == CheckKind::Identity && c.items == 0 {
                self.problems.push(format!("{} checked nothing", c.id));
            }
        }
    }

    fn run(&mut self, algebra: AlgebraId, suite: Suite, nmax: u32, mode: Mode) -> RunReport {
        let report = confluent::verify::run(&CheckConfig::new(algebra, vec![suite], nmax, mode))
            .unwrap_or_else(|e| panic!("{algebra} {suite}: {e}"));
        self.absorb(&report);
        report
    }
}

fn symbolic(out: &mut Outcome, algebras: &[AlgebraId], suite: Suite, nmax: u32) {
    for &alg in algebras {
        out.run(alg, suite, nmax, Mode::Symbolic);
    }
}

fn relations(out: &mut Outcome) {
    symbolic(out, &ALGEBRAS, Suite::Relations, 10);
}

fn bz(out: &mut Outcome) {
    symbolic(out, &[AlgebraId::V, AlgebraId::III], Suite::Bz, 8);
}

fn eigen(out: &mut Outcome) {
    for alg in [AlgebraId::V, AlgebraId::III] {
        out.run(alg, Suite::Eigen, 10, Mode::Symbolic);
        for seed in 1..=3 {
            out.run(alg, Suite::Eigen, 25, Mode::Specialized { seed, trials: 1 });
        }
    }
}

fn actions(out: &mut Outcome) {
    symbolic(out, &[AlgebraId::V, AlgebraId::III], Suite::Actions, 10);
    symbolic(out, &[AlgebraId::IIID7, AlgebraId::IIID8], Suite::Actions, 12);
}

fn iterated(out: &mut Outcome) {
    symbolic(out, &[AlgebraId::IIID7, AlgebraId::IIID8], Suite::Iterated, 8);
}

fn leading(out: &mut Outcome) {
    symbolic(out, &ALGEBRAS, Suite::Leading, 12);
}

fn forward_shift(out: &mut Outcome) {
    symbolic(out, &ALGEBRAS, Suite::ForwardShift, 12);
}

fn degenerations(out: &mut Outcome) {
    let report = out.run(AlgebraId::V, Suite::Degenerations, 12, Mode::Symbolic);
    for step in ["dual-q-hahn-to-al-salam-chihara", "al-salam-chihara-to-big-q-hermite", "big-q-hermite-to-q-hermite"] {
        for part in ["sym", "e-minus", "e-plus"] {
            let id = format!("degenerations/{step}/{part}/n=12");
            if report.get(&id).is_none() {
                out.problems.push(format!("{id} missing"));
            }
        }
    }
}

fn eta(out: &mut Outcome) {
    symbolic(out, &[AlgebraId::III], Suite::Eta, 8);
}

fn explicit_y(out: &mut Outcome) {
    symbolic(out, &[AlgebraId::V], Suite::ExplicitY, 8);
}

fn dagger_and_basis(out: &mut Outcome) {
    symbolic(out, &ALGEBRAS, Suite::Dagger, 12);
    symbolic(out, &ALGEBRAS, Suite::Basis, 12);
}

fn mutations(out: &mut Outcome) {
    for alg in ALGEBRAS {
        let report = out.run(alg, Suite::Mutations, 6, Mode::Symbolic);
        let witnessed = report
            .checks
            .iter()
            .filter(|c| c.kind == CheckKind::Control && c.status == Status::Pass)
            .filter(|c| {
                c.witness
                    .as_ref()
                    .and_then(|w| w.residual.as_ref())
                    .is_some_and(|r| !r.terms.is_empty())
            })
            .count();
        if witnessed < 5 {
            out.problems
                .push(format!("{alg}: only {witnessed} perturbed relations failed with a nonzero witness"));
        }
    }
}

fn determinism(out: &mut Outcome) {
    let configs = [
        CheckConfig::new(AlgebraId::V, vec![Suite::Relations, Suite::Bz], 5, Mode::Symbolic),
        CheckConfig::new(AlgebraId::III, Suite::all_for(AlgebraId::III), 3, Mode::Specialized { seed: 9, trials: 2 }),
        CheckConfig::new(AlgebraId::IIID7, vec![Suite::Iterated, Suite::Mutations], 4, Mode::Symbolic),
    ];
    for cfg in configs {
        let first = confluent::verify::run(&cfg).expect("valid config");
        let second = confluent::verify::run(&cfg).expect("valid config");
        out.absorb(&first);
        if first.to_json() != second.to_json() {
            out.problems.push(format!("{} reports differ between runs", cfg.algebra));
        }
    }
}

fn main() -> ExitCode {
    let criteria: [(&str, fn(&mut Outcome)); 13] = [
        ("defining relations on z^k, |k| <= 10, all four algebras", relations),
        ("Y, Z, X, T1 relations and reorderings for V and III on z^k, |k| <= 8", bz),
        ("Y and Z eigenvalues on E_-n, E_n: n <= 10 symbolic, n <= 25 at seeds 1, 2, 3", eigen),
        ("T0, T1 actions on E_-j, E_j: j <= 10 for V and III, j <= 12 for D7 and D8", actions),
        ("iterated actions and estimates for D7 and D8, j, l <= 8, k in {-2, 0, 3}", iterated),
        ("extreme coefficients of E_-n, E_n for n <= 12", leading),
        ("forward shift for n <= 12", forward_shift),
        ("degeneration chain c -> 0, b -> 0, a -> 0 for n <= 12", degenerations),
        ("image of T0 -> -X T0 satisfies the tilde relations on z^k, |k| <= 8", eta),
        ("explicit Y agrees with T1 T0 on z^k, |k| <= 8", explicit_y),
        ("half-power cancellation and unit triangularity for n <= 12", dagger_and_basis),
        ("perturbed relations fail with a nonzero witness", mutations),
        ("identical configurations give byte-identical reports", determinism),
    ];
    let mut failed = 0;
    for (i, (title, criterion)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut out = Outcome::new();
        criterion(&mut out);
        let secs = start.elapsed().as_secs_f64();
        let verdict = if out.problems.is_empty() { "PASS" } else { "FAIL" };
        println!(
            "criterion {:>2} {verdict}: {title} ({} checks, {} inputs, {secs:.1} s)",
            i + 1,
            out.checks,
            out.inputs
        );
        for p in out.problems.iter().take(10) {
            println!("    {p}");
        }
        if !out.problems.is_empty() {
            failed += 1;
        }
    }
    println!("{} of 13 criteria passed", 13 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
