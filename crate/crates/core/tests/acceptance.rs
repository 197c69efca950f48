//! Acceptance gate: one PASS/FAIL line per criterion.
//!
//! Failing criteria are reported but do not change the exit status unless
//! `ACD4_ACCEPTANCE_STRICT=1` is set.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use acd4::constructions::{fold, mix, self_dual_complement_acd, unfold};
use acd4::paperdata::{self, VerifyOptions};
use acd4::search::{random_search, random_search_parallel, SearchConfig};
use acd4::{AdditiveCode, BinaryCode, BitVec, CodeFile, F2Matrix, F4Vector, Form, Gf4, LinearCodeF4, LinearForm};

/// Seed for which the `(6, 2^5, 4)` trace-Euclidean search succeeds.
const DOCUMENTED_SEED: u64 = 1;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn random_vector(rng: &mut ChaCha8Rng, n: usize) -> F4Vector {
    let e: Vec<Gf4> = (0..n).map(|_| Gf4::from_code(rng.random_range(0..4))).collect();
    F4Vector::from_elements(&e)
}

/// Additive code of length `n` and 2-dimension exactly `k`.
fn random_code(rng: &mut ChaCha8Rng, n: usize, k: usize) -> AdditiveCode {
    loop {
        let rows: Vec<F4Vector> = (0..k).map(|_| random_vector(rng, n)).collect();
        let c = AdditiveCode::from_generator(n, &rows).unwrap();
        if c.k() == k {
            return c;
        }
    }
}

fn random_bits(rng: &mut ChaCha8Rng, n: usize) -> BitVec {
    BitVec::from_bools((0..n).map(|_| rng.random_bool(0.5)))
}

fn random_binary(rng: &mut ChaCha8Rng, n: usize, k: usize) -> BinaryCode {
    loop {
        let rows = (0..k).map(|_| random_bits(rng, n)).collect();
        let c = BinaryCode::from_rows(n, rows).unwrap();
        if c.k() == k {
            return c;
        }
    }
}

fn random_codeword(rng: &mut ChaCha8Rng, c: &AdditiveCode) -> F4Vector {
    let mut w = F4Vector::zeros(c.n());
    for r in c.rows() {
        if rng.random_bool(0.5) {
            w.add_assign(&r);
        }
    }
    w
}

/// Σ Tr(x_i ȳ_i) or Σ Tr(x_i y_i), straight from field arithmetic.
fn pair_naive(form: Form, x: &[Gf4], y: &[Gf4]) -> bool {
    x.iter().zip(y).fold(false, |acc, (&a, &b)| {
        let b = match form {
            Form::TraceHermitian => b.conj(),
            Form::TraceEuclidean => b,
        };
        acc ^ a.mul(b).trace()
    })
}

fn all_vectors(n: usize) -> impl Iterator<Item = Vec<Gf4>> {
    (0..1u64 << (2 * n)).map(move |mut x| {
        (0..n)
            .map(|_| {
                let e = Gf4::from_code((x & 3) as u8);
                x >>= 2;
                e
            })
            .collect()
    })
}

fn element_set(c: &AdditiveCode) -> HashSet<Vec<Gf4>> {
    c.codewords(16).unwrap().iter().map(F4Vector::elements).collect()
}

/// Dual by exhausting GF(4)^n.
fn naive_dual(c: &AdditiveCode, form: Form) -> HashSet<Vec<Gf4>> {
    let rows: Vec<Vec<Gf4>> = c.rows().iter().map(F4Vector::elements).collect();
    all_vectors(c.n())
        .filter(|v| rows.iter().all(|g| !pair_naive(form, v, g)))
        .collect()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let without = paperdata::verify_all(&VerifyOptions {
        skip_paut: true,
        ..Default::default()
    });
    let t_without = start.elapsed();
    let start = Instant::now();
    let report = paperdata::verify_all(&VerifyOptions::default());
    let t_with = start.elapsed();
    let failed: Vec<String> = report.failures().map(|c| format!("{} {} (expected {}, got {})", c.id, c.name, c.expected, c.got)).collect();
    let fast = t_without < Duration::from_secs(10) && t_with < Duration::from_secs(60);
    let mut detail = format!(
        "{} checks, {} failed, {} unverified; {:.2?} without paut, {:.2?} with",
        report.checks.len(),
        failed.len(),
        report.count(paperdata::Status::Unverified),
        t_without,
        t_with
    );
    if !failed.is_empty() {
        detail.push_str("; failing: ");
        detail.push_str(&failed.join("; "));
    }
    outcome(report.passed() && without.passed() && fast, detail)
}

fn criteria_2_and_9() -> (Outcome, Outcome) {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let (mut cases, mut agree, mut size_ok, mut double_ok) = (0, 0, 0, 0);
    let mut acd_seen = [0usize; 2];
    while cases < 500 {
        let n = rng.random_range(1..=6);
        let k = rng.random_range(0..=8.min(2 * n));
        let c = random_code(&mut rng, n, k);
        cases += 1;
        let code = element_set(&c);
        let mut all = true;
        let (mut sizes, mut doubles) = (true, true);
        for (i, form) in Form::BOTH.into_iter().enumerate() {
            let dual = naive_dual(&c, form);
            let trivial = code.intersection(&dual).count() == 1;
            all &= trivial == c.is_acd(form);
            acd_seen[i] += usize::from(trivial);
            let fast = c.dual(form);
            sizes &= dual.len() as u64 == 1u64 << (2 * n - k) && fast.k() == 2 * n - k;
            sizes &= element_set(&fast) == dual;
            doubles &= fast.dual(form).equals(&c);
        }
        agree += usize::from(all);
        size_ok += usize::from(sizes);
        double_ok += usize::from(doubles);
    }
    (
        outcome(
            agree == cases && acd_seen.iter().all(|&a| a > 0),
            format!(
                "{agree}/{cases} codes agree on both forms ({} trH-ACD, {} trE-ACD)",
                acd_seen[0], acd_seen[1]
            ),
        ),
        outcome(
            size_ok == cases && double_ok == cases,
            format!("dual size 2^(2n-k) and set equality {size_ok}/{cases}, double dual {double_ok}/{cases}"),
        ),
    )
}

fn criterion_3() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut accepts = 0;
    let trials = 10_000;
    for _ in 0..trials {
        let n = rng.random_range(1..=8);
        let k = 2 * rng.random_range(0..n) + 1;
        if random_code(&mut rng, n, k).is_acd(Form::TraceHermitian) {
            accepts += 1;
        }
    }
    let (mut even_finds, mut alternating) = (0, 0);
    for _ in 0..2_000 {
        let n = rng.random_range(1..=8);
        let k = 2 * rng.random_range(1..=n);
        let c = random_code(&mut rng, n, k);
        if c.is_acd(Form::TraceHermitian) {
            even_finds += 1;
            let g = c.gram(Form::TraceHermitian);
            if g.is_symmetric() && g.has_zero_diagonal() {
                alternating += 1;
            }
        }
    }
    outcome(
        accepts == 0 && even_finds > 0 && alternating == even_finds,
        format!(
            "{accepts} trH accepts among {trials} odd-k codes; {alternating}/{even_finds} even-k finds have a symmetric zero-diagonal Gram"
        ),
    )
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut even = 0;
    let total = 1_000;
    for _ in 0..total {
        let size = rng.random_range(1..=12);
        let mut m = F2Matrix::zeros(size, size);
        for i in 0..size {
            for j in i + 1..size {
                let bit = rng.random_bool(0.5);
                m.set(i, j, bit);
                m.set(j, i, bit);
            }
        }
        if m.rank().is_multiple_of(2) {
            even += 1;
        }
    }
    outcome(even == total, format!("{even}/{total} symmetric zero-diagonal matrices have even rank"))
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (mut ok, mut total) = (0, 0);
    while total < 200 {
        let n = rng.random_range(1..=7);
        let r = rng.random_range(0..=n);
        let rows: Vec<F4Vector> = (0..r).map(|_| random_vector(&mut rng, n)).collect();
        let l = LinearCodeF4::from_generator(n, &rows).unwrap();
        let a = l.to_additive();
        let h = a.dual(Form::TraceHermitian).equals(&l.dual(LinearForm::Hermitian).to_additive());
        let e = a.dual(Form::TraceEuclidean).equals(&l.dual(LinearForm::Euclidean).to_additive());
        total += 1;
        ok += usize::from(h && e);
    }
    outcome(ok == total, format!("{ok}/{total} linear codes have matching trace and GF(4) duals"))
}

/// Random self-dual binary code of even length `n`, grown one even-weight
/// vector of the current dual at a time.
fn random_self_dual(rng: &mut ChaCha8Rng, n: usize) -> BinaryCode {
    let mut c = BinaryCode::zero(n);
    while c.k() < n / 2 {
        let basis = c.dual().generator().rows().to_vec();
        let mut v = BitVec::zeros(n);
        for b in &basis {
            if rng.random_bool(0.5) {
                v.xor_assign(b);
            }
        }
        if v.count_ones().is_multiple_of(2) && !c.contains(&v) {
            let mut rows = c.generator().rows().to_vec();
            rows.push(v);
            c = BinaryCode::from_rows(n, rows).unwrap();
        }
    }
    c
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let pairs: Vec<(Gf4, Gf4)> = Gf4::UNITS
        .iter()
        .flat_map(|&a| Gf4::UNITS.iter().filter(move |&&b| b != a).map(move |&b| (a, b)))
        .collect();
    let (mut ok, mut total) = (0, 0);
    for _ in 0..60 {
        let n = 2 * rng.random_range(1..=6);
        let c = random_self_dual(&mut rng, n);
        let d = c.complement();
        let dist = c.min_distance().unwrap().into_iter().chain(d.min_distance().unwrap()).min();
        for &(a, b) in &pairs {
            total += 1;
            let m = self_dual_complement_acd(&c, a, b).unwrap();
            let expected_dual = mix(a, &d.dual(), b, &c.dual()).unwrap();
            let good = c.is_self_dual()
                && m.is_acd(Form::TraceHermitian)
                && m.dual(Form::TraceHermitian).equals(&expected_dual)
                && m.min_distance().unwrap() == dist;
            ok += usize::from(good);
        }
    }
    outcome(ok == total, format!("{ok}/{total} (self-dual code, scalar pair) cases, {} pairs each", pairs.len()))
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut fold_ok, mut lcd_count) = (0, 0);
    let binary_cases = 300;
    for _ in 0..binary_cases {
        let n = rng.random_range(1..=8);
        let k = rng.random_range(0..=2 * n);
        let c = random_binary(&mut rng, 2 * n, k);
        let f = fold(&c).unwrap();
        lcd_count += usize::from(c.is_lcd());
        if f.is_acd(Form::TraceEuclidean) == c.is_lcd() && unfold(&f).equals(&c) {
            fold_ok += 1;
        }
    }
    let (mut unfold_ok, mut acd_count) = (0, 0);
    let additive_cases = 300;
    for _ in 0..additive_cases {
        let n = rng.random_range(1..=8);
        let k = rng.random_range(0..=2 * n);
        let c = random_code(&mut rng, n, k);
        let acd = c.is_acd(Form::TraceEuclidean);
        acd_count += usize::from(acd);
        unfold_ok += usize::from(unfold(&c).is_lcd() == acd);
    }
    let mixed = lcd_count > 0 && lcd_count < binary_cases && acd_count > 0 && acd_count < additive_cases;
    outcome(
        mixed && fold_ok == binary_cases && unfold_ok == additive_cases,
        format!(
            "fold {fold_ok}/{binary_cases} ({lcd_count} LCD inputs), unfold {unfold_ok}/{additive_cases} ({acd_count} ACD inputs)"
        ),
    )
}

fn projection_holds(rng: &mut ChaCha8Rng, c: &AdditiveCode, vectors: usize) -> bool {
    let t = c.projector().unwrap();
    let dual = c.dual(Form::TraceEuclidean);
    let n = c.n();
    for r in c.rows() {
        if t.apply(&r).unwrap() != r {
            return false;
        }
    }
    for r in dual.rows() {
        if !t.apply(&r).unwrap().is_zero() {
            return false;
        }
    }
    for _ in 0..vectors {
        let v = random_vector(rng, n);
        let tv = t.apply(&v).unwrap();
        let cw = random_codeword(rng, c);
        let dw = random_codeword(rng, &dual);
        let ok = c.contains(&tv)
            && t.apply(&tv).unwrap() == tv
            && t.apply(&cw).unwrap() == cw
            && t.apply(&dw).unwrap().is_zero()
            && dual.contains(&v.add(&tv));
        if !ok {
            return false;
        }
    }
    true
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut reference = Vec::new();
    for id in paperdata::IDS {
        let code = match paperdata::load(id).unwrap() {
            CodeFile::Additive(a) => a,
            CodeFile::Linear(l) => l.to_additive(),
            CodeFile::Binary(_) => continue,
        };
        if code.is_acd(Form::TraceEuclidean) {
            reference.push((id, code));
        }
    }
    let ref_ok = reference
        .iter()
        .filter(|(_, c)| projection_holds(&mut rng, c, 100))
        .count();
    let (mut found, mut random_ok) = (0, 0);
    while found < 100 {
        let n = rng.random_range(1..=8);
        let k = rng.random_range(1..=2 * n);
        let c = random_code(&mut rng, n, k);
        if c.is_acd(Form::TraceEuclidean) {
            found += 1;
            random_ok += usize::from(projection_holds(&mut rng, &c, 100));
        }
    }
    let ids: Vec<&str> = reference.iter().map(|(id, _)| *id).collect();
    outcome(
        ref_ok == reference.len() && random_ok == found,
        format!(
            "reference codes {ref_ok}/{} ({}), random ACD codes {random_ok}/{found}, 100 vectors each",
            reference.len(),
            ids.join(", ")
        ),
    )
}

fn criterion_10() -> Outcome {
    let cfg = SearchConfig {
        n: 6,
        k: 5,
        d_min: 4,
        form: Form::TraceEuclidean,
        seed: DOCUMENTED_SEED,
        max_trials: 1_000_000,
    };
    let a = random_search(&cfg).unwrap();
    let b = random_search(&cfg).unwrap();
    let chunked: Vec<bool> = [1, 7, 1000, 65_536]
        .iter()
        .map(|&chunk| random_search_parallel(&cfg, chunk).unwrap() == a)
        .collect();
    let small = SearchConfig {
        n: 4,
        k: 3,
        d_min: 1,
        form: Form::TraceHermitian,
        seed: 99,
        max_trials: 500,
    };
    let exhausted = random_search(&small).unwrap();
    let exhausted_same = random_search_parallel(&small, 64).unwrap() == exhausted;
    let verified = a.found.as_ref().is_some_and(|c| {
        c.n() == 6 && c.k() == 5 && c.is_acd(Form::TraceEuclidean) && c.min_distance().unwrap() >= Some(4)
    });
    outcome(
        a == b && chunked.iter().all(|&x| x) && verified && !exhausted.is_found() && exhausted_same,
        format!(
            "seed {DOCUMENTED_SEED}: found after {} trials; reruns equal: {}; chunked equal: {:?}; odd-k trH exhausted in {} trials",
            a.trials_used,
            a == b,
            chunked,
            exhausted.trials_used
        ),
    )
}

fn main() {
    let start = Instant::now();
    let (c2, c9) = criteria_2_and_9();
    let results = [
        ("verify-paper", criterion_1()),
        ("oracle equivalence", c2),
        ("odd k is never trace-Hermitian ACD", criterion_3()),
        ("alternating matrices have even rank", criterion_4()),
        ("linear codes: trace duals equal GF(4) duals", criterion_5()),
        ("self-dual + complement mixes", criterion_6()),
        ("fold / unfold biconditionals", criterion_7()),
        ("projection contract", criterion_8()),
        ("dual size law", c9),
        ("search determinism", criterion_10()),
    ];
    let mut failures = 0;
    for (i, (name, o)) in results.iter().enumerate() {
        let status = if o.pass { "PASS" } else { "FAIL" };
        failures += usize::from(!o.pass);
        println!("[{status}] {:>2} {name}: {}", i + 1, o.detail);
    }
    println!(
        "acceptance: {} passed, {failures} failed in {:.1?}",
        results.len() - failures,
        start.elapsed()
    );
    if failures > 0 && std::env::var("ACD4_ACCEPTANCE_STRICT").is_ok_and(|v| v == "1") {
        std::process::exit(1);
    }
}
