//! Batch driver running every invariant suite over bounded inputs.
//!
//! Cases within a suite may run on a rayon pool; failing inputs are sorted
//! before they are reported so the outcome matches a sequential run.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use whp_core::algebra::{factorial, IntPolynomial};
use whp_core::appell::{
    appell_leading_coeffs, conjugation_holds, factor_p, p_family_z, q_lambda,
    remainder_constant_formula, split_full, wronskian_appell, AppellSpec, Method,
};
use whp_core::asymptotics::psi;
use whp_core::characters::{character_mn_oracle, character_path_sum, CharacterQuery};
use whp_core::hermite::{remainder_constant, subleading_by_content, subleading_by_quotient};
use whp_core::identity::{degree_vector_check, identity_check, identity_symbolic};
use whp_core::laguerre::{hermite_laguerre_check, hermite_omega_check};
use whp_core::partitions::{enumerate_partitions, partitions_up_to};
use whp_core::quotient::phi;
use whp_core::Partition;

/// Bounds of the suites that do not scale with `max_size`.
pub const LAGUERRE_MAX: usize = 10;
pub const PSI_MAX_WEIGHT: usize = 5;
pub const PSI_MAX_K: i64 = 6;
pub const AVERAGE_MAX: usize = 10;
pub const IDENTITY_TUPLES: usize = 200;
pub const IDENTITY_MAX_N: usize = 6;
pub const IDENTITY_SYMBOLIC_N: usize = 4;
pub const APPELL_SEQUENCES: usize = 50;
pub const APPELL_MAX_SIZE: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: String,
    pub bounds: String,
    pub cases: usize,
    pub failures: usize,
    pub failing_inputs: Vec<String>,
    pub wall_time: Duration,
}

impl SuiteReport {
    fn to_json(&self, timings: bool) -> Value {
        let mut v = json!({
            "name": self.name,
            "bounds": self.bounds,
            "cases": self.cases,
            "failures": self.failures,
            "failing_inputs": self.failing_inputs,
        });
        if timings {
            v["wall_ms"] = json!(self.wall_time.as_millis() as u64);
        }
        v
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub max_size: usize,
    pub p_list: Vec<usize>,
    pub seed: u64,
    pub suites: Vec<SuiteReport>,
    pub wall_time: Duration,
}

impl VerifyReport {
    pub fn total_failures(&self) -> usize {
        self.suites.iter().map(|s| s.failures).sum()
    }

    pub fn suite(&self, name: &str) -> Option<&SuiteReport> {
        self.suites.iter().find(|s| s.name == name)
    }

    /// Wall times are left out unless asked for, keeping the output
    /// byte-stable.
    pub fn to_json(&self, timings: bool) -> Value {
        let mut v = json!({
            "max_size": self.max_size,
            "p": self.p_list,
            "seed": self.seed,
            "total_failures": self.total_failures(),
            "suites": self.suites.iter().map(|s| s.to_json(timings)).collect::<Vec<_>>(),
        });
        if timings {
            v["wall_ms"] = json!(self.wall_time.as_millis() as u64);
        }
        v
    }
}

/// Where independent cases run.
pub enum Executor {
    Sequential,
    Pool(rayon::ThreadPool),
}

impl Executor {
    /// `Some(0)` is sequential, `Some(n)` caps the pool at `n` threads and
    /// `None` uses rayon's default size.
    pub fn new(threads: Option<usize>) -> Self {
        match threads {
            Some(0) => Executor::Sequential,
            Some(n) => Executor::pool(n),
            None => Executor::pool(0),
        }
    }

    /// Reads `WHP_THREADS`; unset or unparsable means the default pool.
    pub fn from_env() -> Self {
        let threads = std::env::var("WHP_THREADS")
            .ok()
            .and_then(|v| v.trim().parse().ok());
        Executor::new(threads)
    }

    fn pool(n: usize) -> Self {
        match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => Executor::Pool(pool),
            Err(_) => Executor::Sequential,
        }
    }

    /// Runs `check` on every item and returns the sorted failure messages.
    pub fn failures<T, F>(&self, items: &[T], check: F) -> Vec<String>
    where
        T: Sync,
        F: Fn(&T) -> Option<String> + Sync + Send,
    {
        let mut out: Vec<String> = match self {
            Executor::Sequential => items.iter().filter_map(&check).collect(),
            Executor::Pool(pool) => pool.install(|| items.par_iter().filter_map(&check).collect()),
        };
        out.sort();
        out
    }
}

struct Runner<'a> {
    exec: &'a Executor,
    suites: Vec<SuiteReport>,
}

impl Runner<'_> {
    fn suite<T, F>(&mut self, name: String, bounds: String, items: &[T], check: F)
    where
        T: Sync,
        F: Fn(&T) -> Option<String> + Sync + Send,
    {
        let start = Instant::now();
        let failing_inputs = self.exec.failures(items, check);
        self.suites.push(SuiteReport {
            name,
            bounds,
            cases: items.len(),
            failures: failing_inputs.len(),
            failing_inputs,
            wall_time: start.elapsed(),
        });
    }
}

fn fail_unless(ok: bool, what: impl FnOnce() -> String) -> Option<String> {
    (!ok).then(what)
}

pub fn verify(max_size: usize, p_list: &[usize], seed: u64) -> Result<VerifyReport, String> {
    verify_with(max_size, p_list, seed, &Executor::from_env())
}

pub fn verify_with(
    max_size: usize,
    p_list: &[usize],
    seed: u64,
    exec: &Executor,
) -> Result<VerifyReport, String> {
    if max_size == 0 {
        return Err("--max-size must be at least 1".into());
    }
    if p_list.is_empty() || p_list.contains(&0) {
        return Err("--p needs one or more positive integers".into());
    }
    let start = Instant::now();
    let mut p_sorted = p_list.to_vec();
    p_sorted.sort_unstable();
    p_sorted.dedup();
    let all = partitions_up_to(max_size);
    let mut run = Runner {
        exec,
        suites: Vec::new(),
    };

    for &p in &p_sorted {
        run.suite(
            format!("four_routes/p={p}"),
            format!("|λ| ≤ {max_size}"),
            &all,
            |lam| {
                let base = q_lambda(p, lam, Method::Determinant);
                let bad: Vec<&str> = Method::ALL[1..]
                    .iter()
                    .filter(|m| q_lambda(p, lam, **m) != base)
                    .map(|m| m.name())
                    .collect();
                fail_unless(bad.is_empty(), || {
                    format!("{lam}: {} disagree", bad.join(","))
                })
            },
        );
        run.suite(
            format!("factorization/p={p}"),
            format!("|λ| ≤ {max_size}"),
            &all,
            |lam| factorization_failure(p, lam),
        );
        let char_cases: Vec<(Partition, usize)> = all
            .iter()
            .flat_map(|l| (0..=l.size() / p).map(move |j| (l.clone(), j)))
            .collect();
        run.suite(
            format!("characters/p={p}"),
            format!("|λ| ≤ {max_size}, all j"),
            &char_cases,
            |(lam, j)| {
                let q = CharacterQuery::new(lam.clone(), p, *j).ok()?;
                fail_unless(character_path_sum(&q) == character_mn_oracle(&q), || {
                    format!("{lam} j={j}")
                })
            },
        );
        run.suite(
            format!("conjugation/p={p}"),
            format!("|λ| ≤ {max_size}"),
            &all,
            |lam| fail_unless(conjugation_holds(p, lam), || lam.to_string()),
        );
        let sizes: Vec<usize> = (0..=max_size.min(AVERAGE_MAX)).collect();
        run.suite(
            format!("plancherel_average/p={p}"),
            format!("n ≤ {}", max_size.min(AVERAGE_MAX)),
            &sizes,
            |&n| {
                let mut acc = IntPolynomial::zero();
                for lam in enumerate_partitions(n) {
                    let f = lam.path_count();
                    acc = &acc + &q_lambda(p, &lam, Method::Recurrence).scale(&(&f * &f));
                }
                let target = IntPolynomial::monomial(factorial(n), n);
                fail_unless(acc == target, || format!("n={n}"))
            },
        );
    }

    if p_sorted.contains(&2) {
        run.suite(
            "subleading".into(),
            format!("|λ| ≤ {max_size}"),
            &all,
            |lam| {
                let f = factor_p(2, lam);
                if f.weight == 0 {
                    return None;
                }
                let r1 = f.remainder.coeff(f.weight - 1);
                let ok = subleading_by_content(lam).ok() == Some(r1.clone())
                    && subleading_by_quotient(lam).ok() == Some(r1);
                fail_unless(ok, || lam.to_string())
            },
        );
        let lag: Vec<Partition> = partitions_up_to(max_size.min(LAGUERRE_MAX));
        run.suite(
            "laguerre".into(),
            format!("|λ| ≤ {}", max_size.min(LAGUERRE_MAX)),
            &lag,
            |lam| {
                fail_unless(
                    hermite_laguerre_check(lam) && hermite_omega_check(lam),
                    || lam.to_string(),
                )
            },
        );
        let w = max_size.min(PSI_MAX_WEIGHT);
        let small = partitions_up_to(w);
        let pairs: Vec<(Partition, Partition)> = small
            .iter()
            .flat_map(|mu| {
                small
                    .iter()
                    .filter(move |nu| mu.size() + nu.size() <= w)
                    .map(move |nu| (mu.clone(), nu.clone()))
            })
            .collect();
        run.suite(
            "psi".into(),
            format!("|μ|+|ν| ≤ {w}, k ≤ {PSI_MAX_K}"),
            &pairs,
            |(mu, nu)| {
                let ps = psi(mu, nu);
                let weight = mu.size() + nu.size();
                let lead_ok = ps.poly.degree() == Some(weight)
                    && ps.poly.leading()
                        == whp_core::algebra::numbers::sign(nu.size())
                            * (BigInt::from(1) << weight);
                let values_ok =
                    (0..=PSI_MAX_K).all(|k| ps.eval(k) == remainder_constant(&phi(mu, nu, k)));
                fail_unless(lead_ok && values_ok, || format!("({mu}|{nu})"))
            },
        );
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tuples: Vec<Vec<BigRational>> = (0..IDENTITY_TUPLES)
        .map(|_| {
            let n = rng.gen_range(1..=IDENTITY_MAX_N);
            let mut xs: Vec<BigRational> = Vec::new();
            while xs.len() < n {
                let x = random_rational(&mut rng);
                if !xs.contains(&x) {
                    xs.push(x);
                }
            }
            xs
        })
        .collect();
    run.suite(
        "identity/random".into(),
        format!("{IDENTITY_TUPLES} tuples, n ≤ {IDENTITY_MAX_N}"),
        &tuples,
        |xs| {
            let ok = matches!(identity_check(xs), Ok((l, r)) if l == r);
            fail_unless(ok, || {
                xs.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
        },
    );
    let ns: Vec<usize> = (0..=IDENTITY_SYMBOLIC_N).collect();
    run.suite(
        "identity/symbolic".into(),
        format!("n ≤ {IDENTITY_SYMBOLIC_N}"),
        &ns,
        |&n| fail_unless(identity_symbolic(n).unwrap_or(false), || format!("n={n}")),
    );
    run.suite(
        "identity/degree_vectors".into(),
        format!("|λ| ≤ {max_size}"),
        &all,
        |lam| fail_unless(degree_vector_check(lam), || lam.to_string()),
    );

    let appell_pool: Vec<Partition> = partitions_up_to(max_size.min(APPELL_MAX_SIZE))
        .into_iter()
        .filter(|l| l.size() >= 2)
        .collect();
    if !appell_pool.is_empty() {
        let cases: Vec<(Vec<BigRational>, Partition)> = (0..APPELL_SEQUENCES)
            .map(|_| {
                let z: Vec<BigRational> = (0..APPELL_MAX_SIZE + 4)
                    .map(|_| random_rational(&mut rng))
                    .collect();
                let lam = appell_pool[rng.gen_range(0..appell_pool.len())].clone();
                (z, lam)
            })
            .collect();
        run.suite(
            "appell/leading_coefficients".into(),
            format!(
                "{APPELL_SEQUENCES} z-sequences, 2 ≤ |λ| ≤ {}",
                max_size.min(APPELL_MAX_SIZE)
            ),
            &cases,
            |(z, lam)| {
                let n = lam.size();
                let det =
                    wronskian_appell(&AppellSpec::Generic(z.clone()), lam, Method::Determinant)
                        .ok()?;
                let (a1, a2) = appell_leading_coeffs(z, lam).ok()?;
                let ok = det.is_monic() && det.coeff(n - 1) == a1 && det.coeff(n - 2) == a2;
                fail_unless(ok, || {
                    format!(
                        "{lam} z={}",
                        z.iter()
                            .map(|x| x.to_string())
                            .collect::<Vec<_>>()
                            .join(",")
                    )
                })
            },
        );
        let family: Vec<(usize, Partition)> = p_sorted
            .iter()
            .flat_map(|&p| appell_pool.iter().map(move |l| (p, l.clone())))
            .collect();
        run.suite(
            "appell/p_family_in_generic_mode".into(),
            format!("2 ≤ |λ| ≤ {}", max_size.min(APPELL_MAX_SIZE)),
            &family,
            |(p, lam)| {
                let z = p_family_z(*p, lam.size() + lam.length());
                let generic =
                    wronskian_appell(&AppellSpec::Generic(z), lam, Method::Determinant).ok();
                let ok = generic == Some(q_lambda(*p, lam, Method::Recurrence).to_rational());
                fail_unless(ok, || format!("p={p} {lam}"))
            },
        );
    }

    Ok(VerifyReport {
        max_size,
        p_list: p_sorted,
        seed,
        suites: run.suites,
        wall_time: start.elapsed(),
    })
}

fn factorization_failure(p: usize, lam: &Partition) -> Option<String> {
    let f = factor_p(p, lam);
    let full = q_lambda(p, lam, Method::Recurrence);
    let mut bad = Vec::new();
    if full != f.full {
        bad.push("full polynomial");
    }
    if full.valuation() != Some(f.core_size) {
        bad.push("origin multiplicity");
    }
    if split_full(&full, p, f.core_size).as_ref() != Some(&f.remainder) {
        bad.push("split");
    }
    if !f.remainder.is_monic() || f.remainder.degree() != Some(f.weight) {
        bad.push("monic degree");
    }
    if f.constant().is_zero() || f.constant() != remainder_constant_formula(p, lam) {
        bad.push("constant");
    }
    fail_unless(bad.is_empty(), || format!("{lam}: {}", bad.join(",")))
}

fn random_rational(rng: &mut ChaCha8Rng) -> BigRational {
    let num: i64 = rng.gen_range(-20..=20);
    let den: i64 = rng.gen_range(1..=9);
    BigRational::new(num.into(), den.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_is_clean_and_deterministic() {
        let seq = verify_with(6, &[2, 3], 7, &Executor::new(Some(0))).unwrap();
        assert_eq!(seq.total_failures(), 0, "{:#?}", seq.suites);
        let par = verify_with(6, &[3, 2], 7, &Executor::new(Some(3))).unwrap();
        assert_eq!(seq.to_json(false), par.to_json(false));
        let other_seed = verify_with(6, &[2, 3], 8, &Executor::new(Some(2))).unwrap();
        assert_eq!(other_seed.total_failures(), 0);
        let routes = seq.suite("four_routes/p=2").unwrap();
        assert_eq!(routes.cases, partitions_up_to(6).len());
    }

    #[test]
    fn bad_arguments() {
        assert!(verify_with(0, &[2], 0, &Executor::Sequential).is_err());
        assert!(verify_with(3, &[], 0, &Executor::Sequential).is_err());
        assert!(verify_with(3, &[0], 0, &Executor::Sequential).is_err());
    }
}
