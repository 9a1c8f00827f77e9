//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
//! failure. Runs as a plain binary (`harness = false`).

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use walkers_core::combinatorics::{f_np_bruteforce, f_np_via_shapes, rsk_forward, rsk_inverse, Permutation};
use walkers_core::edge::{airy_ai, fit_chi, kernel, rho_k, sample_max_displacement};
use walkers_core::integrals::verify_identity_ad;
use walkers_core::walks::{
    apply_transposition, collect_walks, diagram_to_tableau_pair, diagram_to_walk, enumerate_walks,
    permutation_to_walk, tableau_pair_to_diagram, walk_to_diagram, walk_to_permutation, SignedDiagram,
    StepWord,
};
use walkers_core::Limits;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn criterion_1() -> Outcome {
    let limits = Limits::default();
    let mut bad = Vec::new();
    for n in 1..=5 {
        for p in 1..=4 {
            let walks = enumerate_walks(p, &StepWord::canonical(n), &limits).unwrap();
            let brute = f_np_bruteforce(n, p, &limits).unwrap();
            let shapes = f_np_via_shapes(n, p);
            if walks != brute || brute != shapes {
                bad.push(format!("(n={n}, p={p}): walks={walks} brute={brute} shapes={shapes}"));
            }
        }
    }
    outcome(bad.is_empty(), format!("20 cases, {} mismatches {}", bad.len(), bad.join("; ")))
}

fn criterion_2() -> Outcome {
    let limits = Limits::default();
    let mut bad = Vec::new();
    let mut words = 0;
    for n in 1..=4 {
        for p in 1..=3 {
            let reference = enumerate_walks(p, &StepWord::canonical(n), &limits).unwrap();
            for w in StepWord::all_balanced(n) {
                words += 1;
                let c = enumerate_walks(p, &w, &limits).unwrap();
                if c != reference {
                    bad.push(format!("(n={n}, p={p}, {w}): {c} != {reference}"));
                }
            }
        }
    }
    outcome(bad.is_empty(), format!("{words} (word, p) pairs, {} mismatches {}", bad.len(), bad.join("; ")))
}

fn criterion_3() -> Outcome {
    let mut bad = Vec::new();
    let mut worst: f64 = 0.0;
    for n in 1..=5 {
        for p in 1..=3 {
            match verify_identity_ad(n, p) {
                Ok(r) => {
                    worst = worst.max(r.residual);
                    if !r.holds || r.residual >= 1e-6 {
                        bad.push(format!(
                            "(n={n}, p={p}): Z={} C={} f={} residual={:e}",
                            r.z_value, r.binom, r.f_value, r.residual
                        ));
                    }
                }
                Err(e) => bad.push(format!("(n={n}, p={p}): {e}")),
            }
        }
    }
    outcome(bad.is_empty(), format!("15 cases, worst residual {worst:e}, failures {}", bad.join("; ")))
}

fn criterion_4() -> Outcome {
    let limits = Limits::default();
    let mut failures = Vec::new();
    let mut checked = 0usize;
    for n in 1..=4 {
        for p in 1..=3 {
            for w in StepWord::all_balanced(n) {
                for h in collect_walks(p, &w, &limits).unwrap() {
                    checked += 1;
                    let d = walk_to_diagram(&h).unwrap();
                    if diagram_to_walk(&d).unwrap() != h {
                        failures.push(format!("walk<->diagram p={p} {w}: {:?}", h));
                        continue;
                    }
                    if !w.is_canonical() {
                        continue;
                    }
                    let pair = diagram_to_tableau_pair(&d).unwrap();
                    if tableau_pair_to_diagram(&pair, p).unwrap() != d {
                        failures.push(format!("diagram<->pair p={p}: {:?}", d));
                    }
                    let perm = walk_to_permutation(&h).unwrap();
                    if permutation_to_walk(&perm, p).unwrap() != h {
                        failures.push(format!("walk<->permutation p={p}: {perm}"));
                    }
                    if rsk_forward(&perm) != pair {
                        failures.push(format!("pair/permutation mismatch p={p}: {perm}"));
                    }
                }
            }
        }
    }
    for n in 1..=7 {
        let mut perm = Permutation::identity(n);
        let mut pairs = BTreeSet::new();
        loop {
            checked += 1;
            let pair = rsk_forward(&perm);
            if rsk_inverse(&pair).unwrap() != perm {
                failures.push(format!("rsk round trip: {perm}"));
            }
            pairs.insert(pair);
            if !perm.next_lexicographic() {
                break;
            }
        }
        let expected: usize = (1..=n).product();
        if pairs.len() != expected {
            failures.push(format!("rsk n={n}: {} distinct pairs, expected {expected}", pairs.len()));
        }
    }
    outcome(
        failures.is_empty(),
        format!("{checked} objects, {} failures {}", failures.len(), failures.join("; ")),
    )
}

fn show(x: &(SignedDiagram, StepWord)) -> String {
    format!("{} {}", x.1, serde_json::to_string(&x.0).unwrap())
}

fn criterion_5() -> Outcome {
    let limits = Limits::default();
    let mut failures = Vec::new();
    let mut checked = 0usize;
    let s = |x: &(SignedDiagram, StepWord), i: usize| apply_transposition(&x.0, &x.1, i).unwrap();
    for n in 1..=3 {
        for p in 1..=3 {
            for w in StepWord::all_balanced(n) {
                for h in collect_walks(p, &w, &limits).unwrap() {
                    let x = (walk_to_diagram(&h).unwrap(), w.clone());
                    checked += 1;
                    for i in 1..2 * n {
                        if s(&s(&x, i), i) != x {
                            failures.push(format!("s_{i}^2 != id on {}", show(&x)));
                        }
                        if i + 1 < 2 * n {
                            let a = s(&s(&s(&x, i), i + 1), i);
                            let b = s(&s(&s(&x, i + 1), i), i + 1);
                            if a != b {
                                failures.push(format!(
                                    "braid s_{i} s_{} s_{i} on {}: {} vs {}",
                                    i + 1,
                                    show(&x),
                                    show(&a),
                                    show(&b)
                                ));
                            }
                        }
                        for j in i + 2..2 * n {
                            if s(&s(&x, i), j) != s(&s(&x, j), i) {
                                failures.push(format!("s_{i} s_{j} != s_{j} s_{i} on {}", show(&x)));
                            }
                        }
                    }
                }
            }
        }
    }
    outcome(
        failures.is_empty(),
        format!("{checked} admissible pairs, {} counterexamples {}", failures.len(), failures.join("; ")),
    )
}

fn criterion_6() -> Outcome {
    let ratios: Vec<f64> = [100usize, 1000, 10_000]
        .iter()
        .map(|&n| sample_max_displacement(n, 2000, 6).unwrap().mean_over_sqrt_n())
        .collect();
    let increasing = ratios.windows(2).all(|w| w[0] < w[1]);
    let last = ratios[2];
    outcome(
        increasing && (1.85..=2.00).contains(&last),
        format!("mean/sqrt(n) at 1e2, 1e3, 1e4 = {:.4}, {:.4}, {:.4}", ratios[0], ratios[1], ratios[2]),
    )
}

fn criterion_7() -> Outcome {
    let stats: Vec<_> = [100usize, 1000, 10_000, 100_000]
        .iter()
        .map(|&n| sample_max_displacement(n, 2000, 7).unwrap())
        .collect();
    let fit = fit_chi(&stats).unwrap();
    let stds: Vec<String> = stats.iter().map(|s| format!("{:.3}", s.std)).collect();
    outcome(
        (0.25..=0.41).contains(&fit.chi_hat),
        format!("chi_hat = {:.4} (r^2 = {:.4}), std = [{}]", fit.chi_hat, fit.r_squared, stds.join(", ")),
    )
}

fn criterion_8() -> Outcome {
    let h = 3e-4;
    let mut worst: f64 = 0.0;
    for k in 0..=1600 {
        let x = -10.0 + 0.01 * k as f64;
        let ai = airy_ai(x).unwrap();
        let second = (airy_ai(x + h).unwrap() - 2.0 * ai + airy_ai(x - h).unwrap()) / (h * h);
        worst = worst.max((second - x * ai).abs());
    }

    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut asymmetric = 0;
    for _ in 0..10_000 {
        let x = rng.gen_range(-10.0..6.0);
        let y = if rng.gen_bool(0.3) { x + rng.gen_range(-2e-4..2e-4) } else { rng.gen_range(-10.0..6.0) };
        if kernel(x, y).unwrap().to_bits() != kernel(y, x).unwrap().to_bits() {
            asymmetric += 1;
        }
    }

    let mut min_rho = f64::INFINITY;
    for _ in 0..1000 {
        let k = rng.gen_range(1..=4);
        let points: Vec<f64> = (0..k).map(|_| rng.gen_range(-8.0..4.0)).collect();
        min_rho = min_rho.min(rho_k(&points).unwrap());
    }
    outcome(
        worst < 1e-6 && asymmetric == 0 && min_rho >= -1e-10,
        format!("ODE residual {worst:e}; {asymmetric} asymmetric kernel pairs; min rho_k {min_rho:e}"),
    )
}

fn criterion_9() -> Outcome {
    let stats = sample_max_displacement(3, 20_000, 9).unwrap();
    let exact_var = 1.0 / 3.0;
    let sigma = (exact_var / stats.trials as f64).sqrt();
    let dev = (stats.mean - 2.0).abs();
    outcome(
        dev <= 3.0 * sigma,
        format!("mean {:.5}, |mean - 2| = {dev:.5} vs 3 sigma = {:.5}, std {:.5}", stats.mean, 3.0 * sigma, stats.std),
    )
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("walk count = brute force = tableau count (n<=5, p<=4)", criterion_1),
        ("count independent of step word (n<=4, p<=3)", criterion_2),
        ("closed-walk integral = C(2n,n) f(n,p) (n<=5, p<=3)", criterion_3),
        ("bijection round trips (2n<=8, p<=3; RSK n<=7)", criterion_4),
        ("s_i involution and braid relations (2n<=6, p<=3)", criterion_5),
        ("mean LIS / sqrt(n) scaling", criterion_6),
        ("fluctuation exponent fit", criterion_7),
        ("Airy and kernel numerics", criterion_8),
        ("n = 3 moment oracle", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        let tag = if o.pass { "PASS" } else { "FAIL" };
        if !o.pass {
            failed += 1;
        }
        println!("{tag} [{}] {name}: {} ({:.1}s)", i + 1, o.detail, start.elapsed().as_secs_f64());
    }
    if failed == 0 {
        println!("acceptance: all {} criteria passed", criteria.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of {} criteria failed", criteria.len());
        ExitCode::FAILURE
    }
}
