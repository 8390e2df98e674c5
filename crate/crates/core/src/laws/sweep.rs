use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{is_prime_u64, OddPrime};
use crate::error::{Error, Result};
use crate::modulus::{odd_moduli_up_to, FourOneModulus};
use crate::pell::fundamental_negative_unit;

use super::{
    report::named, two_part_splits, verify_burde, verify_burde_all_reps, verify_ec, verify_furuta_with, verify_gauss2,
    verify_scholz_mutual_with, verify_scholz_with, Law, LawReport, UnitTable,
};

/// Range and mode of a sweep. Upper bounds are inclusive.
#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub law: Law,
    /// Largest `m` (for `ec --even`, the largest odd part `m'` of `m = 8m'`).
    pub m_max: u64,
    /// Largest `n`, or largest prime `p` for `ec` and `gauss2`.
    pub n_max: u64,
    pub jobs: usize,
    /// `ec` only: use the moduli `8·m'`, including `8` itself.
    pub even: bool,
    /// `burde` only: check every representation and sign choice.
    pub all_reps: bool,
    /// Restrict `m` and `n` to primes.
    pub primes_only: bool,
}

impl SweepConfig {
    pub fn new(law: Law, m_max: u64, n_max: u64) -> SweepConfig {
        SweepConfig {
            law,
            m_max,
            n_max,
            jobs: 1,
            even: false,
            all_reps: false,
            primes_only: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub law: &'static str,
    pub checked: u64,
    pub matched: u64,
    pub mismatched: u64,
    pub skipped: u64,
    pub errors: u64,
    #[serde(skip)]
    pub counterexamples: Vec<LawReport>,
}

impl SweepSummary {
    pub fn all_matched(&self) -> bool {
        self.mismatched == 0 && self.errors == 0
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("summary serializes")
    }
}

#[derive(Debug, Clone)]
pub struct SweepOutcome {
    pub summary: SweepSummary,
    /// Every instance, in enumeration order.
    pub reports: Vec<LawReport>,
}

impl SweepOutcome {
    pub fn write_json_lines<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        for r in &self.reports {
            writeln!(out, "{}", r.to_json_line())?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
enum Instance {
    Pair(FourOneModulus, FourOneModulus),
    Prime(FourOneModulus, OddPrime),
    Single(OddPrime),
}

fn moduli(max: u64, primes_only: bool) -> Vec<FourOneModulus> {
    let mut all = odd_moduli_up_to(max);
    if primes_only {
        all.retain(FourOneModulus::is_prime);
    }
    all
}

fn primes_one_mod(modulus: u64, max: u64) -> Vec<OddPrime> {
    (1 + modulus..=max)
        .step_by(modulus as usize)
        .filter(|&p| is_prime_u64(p))
        .map(OddPrime::new_unchecked)
        .collect()
}

fn instances(cfg: &SweepConfig) -> Result<Vec<Instance>> {
    let list = match cfg.law {
        Law::Gauss2 => primes_one_mod(8, cfg.n_max).into_iter().map(Instance::Single).collect(),
        Law::Ec => {
            let (ms, ps) = if cfg.even {
                let mut ms = vec![FourOneModulus::new(8)?];
                for m in moduli(cfg.m_max, cfg.primes_only) {
                    if let Some(v) = m.value().checked_mul(8) {
                        ms.push(FourOneModulus::new(v)?);
                    }
                }
                (ms, primes_one_mod(8, cfg.n_max))
            } else {
                (moduli(cfg.m_max, cfg.primes_only), primes_one_mod(4, cfg.n_max))
            };
            ms.iter()
                .flat_map(|m| ps.iter().map(move |&p| Instance::Prime(m.clone(), p)))
                .collect()
        }
        Law::Burde | Law::Scholz | Law::ScholzMutual | Law::Furuta => {
            let ms = moduli(cfg.m_max, cfg.primes_only);
            let ns = moduli(cfg.n_max, cfg.primes_only);
            let symmetric = cfg.law == Law::Burde;
            ms.iter()
                .flat_map(|m| {
                    ns.iter()
                        .filter(move |n| {
                            if symmetric {
                                n.value() > m.value()
                            } else {
                                n.value() != m.value()
                            }
                        })
                        .map(move |n| Instance::Pair(m.clone(), n.clone()))
                })
                .collect()
        }
    };
    Ok(list)
}

fn unit_table(cfg: &SweepConfig, items: &[Instance]) -> UnitTable {
    let mut wanted: Vec<FourOneModulus> = Vec::new();
    if matches!(cfg.law, Law::Scholz | Law::ScholzMutual | Law::Furuta) {
        for item in items {
            if let Instance::Pair(m, n) = item {
                wanted.push(m.clone());
                if cfg.law == Law::ScholzMutual {
                    wanted.push(n.clone());
                }
                if cfg.law == Law::Furuta {
                    for p in m.odd_primes() {
                        wanted.push(FourOneModulus::new(p.get()).expect("prime modulus"));
                    }
                    for (r, s) in two_part_splits(m) {
                        wanted.push(r);
                        wanted.push(s);
                    }
                }
            }
        }
    }
    wanted.sort_by_key(FourOneModulus::value);
    wanted.dedup();
    let computed: Vec<_> = wanted
        .par_iter()
        .map(|m| (m.value(), fundamental_negative_unit(m)))
        .collect();
    let mut table = UnitTable::new();
    table.extend(computed);
    table
}

fn run_one(cfg: &SweepConfig, item: &Instance, units: &UnitTable) -> LawReport {
    let result = match item {
        Instance::Single(p) => verify_gauss2(*p),
        Instance::Prime(m, p) => verify_ec(m, *p),
        Instance::Pair(m, n) => match cfg.law {
            Law::Burde if cfg.all_reps => verify_burde_all_reps(m, n),
            Law::Burde => verify_burde(m, n),
            Law::Scholz => verify_scholz_with(m, n, units),
            Law::ScholzMutual => verify_scholz_mutual_with(m, n, units),
            Law::Furuta => verify_furuta_with(m, n, units, true),
            Law::Ec | Law::Gauss2 => unreachable!("pair instance for {}", cfg.law),
        },
    };
    result.unwrap_or_else(|e| {
        let inputs = match item {
            Instance::Single(p) => named(&[("p", p.get() as i64)]),
            Instance::Prime(m, p) => named(&[("m", m.value() as i64), ("p", p.get() as i64)]),
            Instance::Pair(m, n) => named(&[("m", m.value() as i64), ("n", n.value() as i64)]),
        };
        LawReport::skipped(cfg.law, inputs, format!("error: {e}"))
    })
}

/// Enumerates every instance in range, verifies each, and aggregates.
///
/// Reports come back in enumeration order whatever `jobs` is. Instances whose
/// verifier failed are kept as reports with an `error: ` skip reason and
/// counted under `errors`.
pub fn sweep(cfg: &SweepConfig) -> Result<SweepOutcome> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs.max(1))
        .build()
        .map_err(|e| Error::Invariant(format!("thread pool: {e}")))?;
    let items = instances(cfg)?;
    let reports: Vec<LawReport> = pool.install(|| {
        let units = unit_table(cfg, &items);
        items.par_iter().map(|item| run_one(cfg, item, &units)).collect()
    });
    let mut summary = SweepSummary {
        law: cfg.law.id(),
        checked: 0,
        matched: 0,
        mismatched: 0,
        skipped: 0,
        errors: 0,
        counterexamples: Vec::new(),
    };
    for r in &reports {
        match &r.skipped {
            Some(reason) if reason.starts_with("error: ") => {
                summary.errors += 1;
                summary.counterexamples.push(r.clone());
            }
            Some(_) => summary.skipped += 1,
            None => {
                summary.checked += 1;
                if r.matched {
                    summary.matched += 1;
                } else {
                    summary.mismatched += 1;
                    summary.counterexamples.push(r.clone());
                }
            }
        }
    }
    Ok(SweepOutcome { summary, reports })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::jacobi_u64;

    #[test]
    fn ec_single_modulus_count() {
        let outcome = sweep(&SweepConfig::new(Law::Ec, 5, 99)).unwrap();
        let expected: Vec<u64> = (5..100u64)
            .filter(|&p| p % 4 == 1 && is_prime_u64(p) && p != 5 && jacobi_u64(p % 5, 5) == 1)
            .collect();
        assert_eq!(expected, vec![29, 41, 61, 89]);
        assert_eq!(outcome.summary.checked, expected.len() as u64);
        assert_eq!(outcome.summary.matched, outcome.summary.checked);
        assert!(outcome.summary.all_matched());
    }

    #[test]
    fn gauss2_small_range() {
        let outcome = sweep(&SweepConfig::new(Law::Gauss2, 0, 10_000)).unwrap();
        assert!(outcome.summary.checked > 0);
        assert_eq!(outcome.summary.matched, outcome.summary.checked);
    }

    #[test]
    fn burde_counts_gcd_skips() {
        let outcome = sweep(&SweepConfig::new(Law::Burde, 200, 200)).unwrap();
        let gcd_skips = outcome
            .reports
            .iter()
            .filter(|r| r.skipped.as_deref().is_some_and(|s| s.starts_with("gcd")))
            .count();
        assert!(gcd_skips > 0);
        assert!(outcome.summary.all_matched());
        assert_eq!(
            outcome.summary.checked + outcome.summary.skipped,
            outcome.reports.len() as u64
        );
    }

    #[test]
    fn order_is_independent_of_jobs() {
        let mut cfg = SweepConfig::new(Law::Scholz, 300, 300);
        let one = sweep(&cfg).unwrap();
        cfg.jobs = 4;
        let four = sweep(&cfg).unwrap();
        assert_eq!(one.reports, four.reports);
        assert_eq!(one.summary, four.summary);
    }
}
