//! End-to-end acceptance suite. Each test prints one `acceptance N ...:
//! PASS/FAIL` line (run with `--nocapture` to see them all) and fails the
//! build if its criterion is not met.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use listdec::codec::{
    self, corrupt, list_decode_code, ml_decode_bruteforce, EvalOrder, ExperimentConfig, RSCode,
};
use listdec::decoder::{
    choose_parameters, grid_reconstruct, list_decode, schwartz_zippel_test, GridInstance,
};
use listdec::field::{FieldCtx, FieldElement};
use listdec::interp::find_vanishing_poly;
use listdec::poly::{Degree, MultiPoly, UniPoly};
use listdec::rootfind::{is_y_root, univariate_y_roots, univariate_y_roots_exhaustive};

fn gf(p: u32) -> FieldCtx {
    FieldCtx::new(p).unwrap()
}

fn report(number: usize, label: &str, failures: &[String]) {
    if failures.is_empty() {
        println!("acceptance {number} {label}: PASS");
    } else {
        println!("acceptance {number} {label}: FAIL");
        for f in failures {
            println!("  - {f}");
        }
    }
    assert!(failures.is_empty(), "acceptance {number} {label} failed");
}

/// Smallest s with s*s >= x.
fn ceil_sqrt(x: usize) -> usize {
    let mut s = 0usize;
    while s * s < x {
        s += 1;
    }
    s
}

#[test]
fn acceptance_1_minimum_threshold_formula() {
    let mut failures = Vec::new();
    let started = Instant::now();
    for (n, d, expect) in [(7usize, 1usize, 4usize), (31, 2, 11)] {
        let params = choose_parameters(n, d);
        if params.t != expect {
            failures.push(format!(
                "({n}, {d}): t_min = {} instead of {expect}",
                params.t
            ));
        }
        // Closed form: d * ceil(sqrt(2(n+1)/d)) - floor(d/2). The ceiling
        // of the square root of a ratio is computed in exact integers.
        let s = (1..).find(|&s| s * s * d >= 2 * (n + 1)).unwrap();
        if s != ceil_sqrt(2 * (n + 1) / d + usize::from(2 * (n + 1) % d != 0)) {
            failures.push(format!("({n}, {d}): inconsistent ceil-sqrt computations"));
        }
        let closed_form = d * s - d / 2;
        if params.t != closed_form {
            failures.push(format!(
                "({n}, {d}): t_min = {} but closed form gives {closed_form}",
                params.t
            ));
        }
    }
    let elapsed = started.elapsed();
    if elapsed >= Duration::from_millis(1) {
        failures.push(format!(
            "parameter choice took {elapsed:?}, expected < 1 ms"
        ));
    }
    report(1, "minimum threshold formula", &failures);
}

fn scan_univariate_candidates(
    ctx: FieldCtx,
    points: &[(FieldElement, FieldElement)],
    d: usize,
    t: usize,
) -> Vec<(UniPoly, usize)> {
    let p = ctx.modulus() as u64;
    let total = p.pow(d as u32 + 1);
    let mut out = Vec::new();
    for i in 0..total {
        let mut coeffs = vec![0u64; d + 1];
        let mut rest = i;
        for c in coeffs.iter_mut().rev() {
            *c = rest % p;
            rest /= p;
        }
        let f = UniPoly::from_values(ctx, &coeffs);
        let agreement = points.iter().filter(|&&(x, y)| f.eval(x) == y).count();
        if agreement >= t {
            out.push((f, agreement));
        }
    }
    out
}

#[test]
fn acceptance_2_decoding_past_unique_radius() {
    let mut failures = Vec::new();
    let started = Instant::now();
    let ctx = gf(31);
    let code = RSCode::new(ctx, 2, EvalOrder::Natural).unwrap();
    let mut contained = 0usize;
    let trials = 100usize;
    for trial in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(1000 + trial as u64);
        let coeffs: Vec<u64> = (0..3).map(|_| rng.gen_range(0..31)).collect();
        let planted = UniPoly::from_values(ctx, &coeffs);
        let tx = code.encode(&planted).unwrap();
        let (rx, _) = corrupt(&tx, 20, 2000 + trial as u64).unwrap();

        let points: Vec<(FieldElement, FieldElement)> = code
            .eval_points()
            .iter()
            .copied()
            .zip(rx.symbols().iter().copied())
            .collect();
        let agreement = points
            .iter()
            .filter(|&&(x, y)| planted.eval(x) == y)
            .count();
        if agreement != 11 {
            failures.push(format!(
                "trial {trial}: planted agreement {agreement}, not 11"
            ));
            continue;
        }
        let out = list_decode(ctx, &points, 2, 11).unwrap();
        if out.candidates.iter().any(|(f, _)| *f == planted) {
            contained += 1;
        }
        let oracle = scan_univariate_candidates(ctx, &points, 2, 11);
        if out.candidates != oracle {
            failures.push(format!(
                "trial {trial}: decoder list ({} entries) differs from the 29791-candidate scan ({} entries)",
                out.candidates.len(),
                oracle.len()
            ));
        }
    }
    if contained * 100 < trials * 99 {
        failures.push(format!(
            "planted polynomial contained in only {contained}/{trials} lists"
        ));
    }
    let elapsed = started.elapsed();
    if elapsed >= Duration::from_secs(30) {
        failures.push(format!("took {elapsed:?}, expected < 30 s"));
    }
    report(2, "decoding past the unique radius", &failures);
}

#[test]
fn acceptance_3_vanishing_polynomial_exists() {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    let primes = [2u32, 3, 5, 7, 11, 13];
    for case in 0..200 {
        let p = primes[rng.gen_range(0..primes.len())];
        let ctx = gf(p);
        let d = rng.gen_range(0..=3usize);
        let l = rng.gen_range(0..=4usize);
        let mut m = rng.gen_range(0..=4usize);
        let n = rng.gen_range(0..=9usize);
        while listdec::interp::count_monomials(m, l, d, 1) <= n as u64 {
            m += 1;
        }
        let mut points: Vec<Vec<FieldElement>> = (0..n)
            .map(|_| {
                vec![
                    ctx.element(rng.gen_range(0..p as u64)),
                    ctx.element(rng.gen_range(0..p as u64)),
                ]
            })
            .collect();
        // Half the cases get a repeated x with a conflicting y.
        if n >= 1 && case % 2 == 0 {
            let x = points[0][0];
            let y = points[0][1] + ctx.one();
            points.pop();
            points.push(vec![x, y]);
        }
        match find_vanishing_poly(ctx, &points, m, l, d, 1) {
            None => failures.push(format!("case {case}: no kernel vector despite the count")),
            Some(q) => {
                if q.is_zero() {
                    failures.push(format!("case {case}: zero polynomial returned"));
                }
                if q.weighted_degree(&[1, d]) > Degree::Finite(m + l * d) {
                    failures.push(format!(
                        "case {case}: weighted degree exceeds {}",
                        m + l * d
                    ));
                }
                if let Some(pt) = points.iter().find(|pt| !q.eval(pt).is_zero()) {
                    failures.push(format!("case {case}: nonzero at ({}, {})", pt[0], pt[1]));
                }
            }
        }
    }
    report(3, "vanishing polynomial existence", &failures);
}

#[test]
fn acceptance_4_agreement_forces_divisibility() {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(44);
    let primes = [5u32, 7, 11, 13];
    let mut done = 0usize;
    while done < 200 {
        let p = primes[rng.gen_range(0..primes.len())];
        let ctx = gf(p);
        let d = rng.gen_range(1..=2usize);
        let n = rng.gen_range(2..=p as usize);
        let params = choose_parameters(n, d);
        if params.t > n {
            continue;
        }
        done += 1;

        // Distinct x-coordinates, so each agreement kills one linear factor.
        let xs = rand::seq::index::sample(&mut rng, p as usize, n).into_vec();
        let coeffs: Vec<u64> = (0..=d).map(|_| rng.gen_range(0..p as u64)).collect();
        let planted = UniPoly::from_values(ctx, &coeffs);
        let agree = rng.gen_range(params.t..=n);
        let points: Vec<Vec<FieldElement>> = xs
            .iter()
            .enumerate()
            .map(|(i, &x)| {
                let x = ctx.element(x as u64);
                let mut y = planted.eval(x);
                if i >= agree {
                    y = y + ctx.element(rng.gen_range(1..p as u64));
                }
                vec![x, y]
            })
            .collect();

        let q = find_vanishing_poly(ctx, &points, params.m, params.l, d, 1).unwrap();
        match is_y_root(&q, &MultiPoly::from_uni(&planted), d) {
            Ok(true) => {}
            other => {
                failures.push(format!(
                    "p={p} n={n} d={d} agree={agree}: substitution nonzero ({other:?})"
                ));
                continue;
            }
        }
        let roots = univariate_y_roots(&q, d).unwrap();
        if !roots.contains(&planted) {
            failures.push(format!("p={p} n={n} d={d}: planted missing from root list"));
        }
    }
    report(4, "agreement forces divisibility", &failures);
}

#[test]
fn acceptance_5_rootfinder_matches_oracle() {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(55);
    for case in 0..100 {
        let p = [5u32, 7][rng.gen_range(0..2)];
        let ctx = gf(p);
        let d = rng.gen_range(0..=2usize);
        let y = MultiPoly::var(ctx, 2, 1);
        let xdeg = rng.gen_range(0..=2usize);
        let mut xcoeffs: Vec<u64> = (0..=xdeg).map(|_| rng.gen_range(0..p as u64)).collect();
        let last = xcoeffs.len() - 1;
        xcoeffs[last] = rng.gen_range(1..p as u64);
        let mut poly = MultiPoly::from_uni(&UniPoly::from_values(ctx, &xcoeffs)).embed(2);
        for _ in 0..rng.gen_range(1..=3) {
            let fcoeffs: Vec<u64> = (0..=d).map(|_| rng.gen_range(0..p as u64)).collect();
            let f = MultiPoly::from_uni(&UniPoly::from_values(ctx, &fcoeffs)).embed(2);
            poly = &poly * &(&y - &f);
        }
        let fast = univariate_y_roots(&poly, d).unwrap();
        let slow = univariate_y_roots_exhaustive(&poly, d, 1 << 20).unwrap();
        if fast != slow {
            failures.push(format!(
                "case {case} (p={p}, d={d}): recursion found {} roots, enumeration {}",
                fast.len(),
                slow.len()
            ));
        }
    }
    report(5, "root finder matches exhaustive oracle", &failures);
}

#[test]
fn acceptance_6_grid_matches_oracle() {
    let mut failures = Vec::new();
    let started = Instant::now();
    let ctx = gf(5);
    let axis: Vec<FieldElement> = (0..3u64).map(|v| ctx.element(v)).collect();
    // 1 + x1 + 2*x2 tabulated on {0,1,2}^2, row-major.
    let clean: Vec<u64> = vec![1, 3, 0, 2, 4, 1, 3, 0, 2];

    let scan = |inst: &GridInstance| -> Vec<(MultiPoly, usize)> {
        let mut out = Vec::new();
        // Coefficient-lexicographic order over the basis (1, x2, x1).
        for a in 0..5u64 {
            for b in 0..5u64 {
                for c in 0..5u64 {
                    let f = MultiPoly::from_terms(
                        ctx,
                        2,
                        [
                            (vec![0, 0], ctx.element(a)),
                            (vec![0, 1], ctx.element(b)),
                            (vec![1, 0], ctx.element(c)),
                        ],
                    );
                    let agreement = inst.agreement(&f);
                    if agreement >= inst.t() {
                        out.push((f, agreement));
                    }
                }
            }
        }
        out
    };

    for i in 0..9 {
        for j in (i + 1)..9 {
            let mut table = clean.clone();
            table[i] = (table[i] + 1) % 5;
            table[j] = (table[j] + 1) % 5;
            let inst = GridInstance::new(
                ctx,
                axis.clone(),
                2,
                table.iter().map(|&v| ctx.element(v)).collect(),
                1,
                7,
            )
            .unwrap();
            let out = grid_reconstruct(&inst, 1 << 20).unwrap();
            let oracle = scan(&inst);
            if out.candidates != oracle {
                failures.push(format!(
                    "pattern ({i}, {j}): reconstruction ({} entries) differs from the 125-candidate scan ({} entries)",
                    out.candidates.len(),
                    oracle.len()
                ));
            }
        }
    }
    let elapsed = started.elapsed();
    if elapsed >= Duration::from_secs(10) {
        failures.push(format!("took {elapsed:?}, expected < 10 s"));
    }
    report(
        6,
        "grid reconstruction matches exhaustive oracle",
        &failures,
    );
}

#[test]
fn acceptance_7_random_evaluation_bound() {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let ctx = gf(7);
    let sample: Vec<FieldElement> = ctx.elements().collect();
    for case in 0..20 {
        // Random nonzero bivariate polynomial of total degree <= 3.
        let poly = loop {
            let terms: Vec<(Vec<u32>, FieldElement)> = (0..rng.gen_range(1..=5))
                .map(|_| {
                    let e1 = rng.gen_range(0..=3u32);
                    let e2 = rng.gen_range(0..=(3 - e1));
                    (vec![e1, e2], ctx.element(rng.gen_range(0..7)))
                })
                .collect();
            let q = MultiPoly::from_terms(ctx, 2, terms);
            if !q.is_zero() {
                break q;
            }
        };
        let deg = poly.total_degree().finite().unwrap();
        let zeros = sample
            .iter()
            .flat_map(|&a| sample.iter().map(move |&b| (a, b)))
            .filter(|&(a, b)| poly.eval(&[a, b]).is_zero())
            .count();
        // zeros / 49 <= deg / 7, in integers.
        if zeros * 7 > deg * 49 {
            failures.push(format!(
                "case {case}: zero fraction {zeros}/49 exceeds {deg}/7"
            ));
        }
        for seed in 0..100 {
            if schwartz_zippel_test(&poly, &sample, 25, seed).unwrap() {
                failures.push(format!("case {case}: misclassified as zero at seed {seed}"));
            }
        }
    }
    report(7, "random evaluation zero-rate bound", &failures);
}

#[test]
fn acceptance_8_unique_and_list_decoding_agree() {
    let mut failures = Vec::new();
    let ctx = gf(7);
    let code = RSCode::new(ctx, 1, EvalOrder::Natural).unwrap();
    for msg_idx in 0..49u64 {
        let msg = UniPoly::from_values(ctx, &[msg_idx / 7, msg_idx % 7]);
        let tx = code.encode(&msg).unwrap();
        for e in 0..=2usize {
            for trial in 0..50u64 {
                let seed = (e as u64) * 1_000_000 + msg_idx * 1000 + trial;
                let (rx, _) = corrupt(&tx, e, seed).unwrap();
                let list = list_decode_code(&code, &rx, e).unwrap();
                if list != vec![tx.clone()] {
                    failures.push(format!(
                        "msg {msg_idx} e={e} trial {trial}: list of size {} is not the transmitted word alone",
                        list.len()
                    ));
                }
                let ml = ml_decode_bruteforce(&code, &rx, 1 << 20).unwrap();
                if ml != tx {
                    failures.push(format!(
                        "msg {msg_idx} e={e} trial {trial}: nearest codeword differs"
                    ));
                }
                if failures.len() > 5 {
                    report(8, "unique and list decoding agree", &failures);
                }
            }
        }
    }
    report(8, "unique and list decoding agree", &failures);
}

#[test]
fn acceptance_9_outputs_are_deterministic() {
    let mut failures = Vec::new();

    // Decode list reproducibility, including the rendered form.
    let ctx = gf(31);
    let code = RSCode::new(ctx, 2, EvalOrder::Natural).unwrap();
    let tx = code.encode(&UniPoly::from_values(ctx, &[7, 3, 2])).unwrap();
    let (rx, _) = corrupt(&tx, 20, 9).unwrap();
    let points: Vec<(FieldElement, FieldElement)> = code
        .eval_points()
        .iter()
        .copied()
        .zip(rx.symbols().iter().copied())
        .collect();
    let render = |out: &listdec::decoder::DecodeOutput| -> String {
        out.candidates
            .iter()
            .map(|(f, a)| format!("{f}:{a}"))
            .collect::<Vec<_>>()
            .join(";")
    };
    let first = list_decode(ctx, &points, 2, 11).unwrap();
    let second = list_decode(ctx, &points, 2, 11).unwrap();
    if first != second || render(&first) != render(&second) {
        failures.push("list decoding differed between identical runs".to_string());
    }

    // Grid reconstruction reproducibility.
    let f5 = gf(5);
    let axis: Vec<FieldElement> = (0..3u64).map(|v| f5.element(v)).collect();
    let table: Vec<FieldElement> = [2u64, 3, 0, 2, 0, 1, 3, 0, 2]
        .iter()
        .map(|&v| f5.element(v))
        .collect();
    let inst = GridInstance::new(f5, axis, 2, table, 1, 7).unwrap();
    if grid_reconstruct(&inst, 1 << 20).unwrap() != grid_reconstruct(&inst, 1 << 20).unwrap() {
        failures.push("grid reconstruction differed between identical runs".to_string());
    }

    // Experiment sweep reproducibility, down to the CSV bytes.
    let cfg = ExperimentConfig {
        d: 1,
        trials: 10,
        seed: 123,
        emax: 4,
        order: EvalOrder::Natural,
        budget: 1 << 20,
    };
    let rows1 = codec::run_experiment(gf(7), &cfg).unwrap();
    let rows2 = codec::run_experiment(gf(7), &cfg).unwrap();
    let csv1: Vec<String> = rows1.iter().map(|r| r.csv_line()).collect();
    let csv2: Vec<String> = rows2.iter().map(|r| r.csv_line()).collect();
    if rows1 != rows2 || csv1 != csv2 {
        failures.push("experiment sweep differed between identical runs".to_string());
    }

    report(9, "outputs are deterministic", &failures);
}
