//! Side-by-side evaluation of the rational quartic reciprocity laws.
//!
//! Each verifier computes every side through its own call graph: the
//! "left" sides are quadratic residue symbols of explicit algebraic integers
//! (α, ε, `ac − bd`), the "right" sides are quartic symbols obtained by
//! exponentiation. Inputs outside a law's hypotheses give a skipped report.

mod oracle;
mod report;
mod sweep;

use std::borrow::Cow;
use std::collections::HashMap;

use num_integer::Integer;

use crate::alpha::{alpha_triple, eval_alpha_symbol};
use crate::arith::{jacobi_u64, OddPrime, Sign};
use crate::error::{Error, Result};
use crate::modulus::FourOneModulus;
use crate::pell::{eval_unit_symbol_composite, fundamental_negative_unit, PellUnit};
use crate::quartic::{quartic_symbol_composite, quartic_symbol_prime, quartic_symbol_two};
use crate::two_squares::{all_two_squares, cornacchia_prime, two_squares_composite};

pub use oracle::append_oracle_sides;
pub use report::{Law, LawReport};
pub use sweep::{sweep, SweepConfig, SweepOutcome, SweepSummary};

use report::named;

/// Why `(m, n)` fails the hypotheses of the laws, or `None` if admissible.
///
/// Both Legendre directions are evaluated and must agree (quadratic
/// reciprocity for primes `≡ 1 mod 4`); a disagreement is an internal error.
pub fn admissibility_failure(m: &FourOneModulus, n: &FourOneModulus) -> Result<Option<String>> {
    if m.value().gcd(&n.value()) != 1 {
        return Ok(Some(format!("gcd({m}, {n}) > 1")));
    }
    for p in m.odd_primes() {
        for q in n.odd_primes() {
            let (p, q) = (p.get(), q.get());
            let pq = jacobi_u64(p % q, q);
            let qp = jacobi_u64(q % p, p);
            if pq != qp {
                return Err(Error::Invariant(format!("({p}/{q}) = {pq} but ({q}/{p}) = {qp}")));
            }
            if pq != 1 {
                return Ok(Some(format!("({p}/{q}) = -1")));
            }
        }
    }
    for (even, odd) in [(m, n), (n, m)] {
        if even.is_even() {
            if let Some(q) = odd.odd_primes().iter().find(|q| q.get() % 8 != 1) {
                return Ok(Some(format!("({q}/2) = -1")));
            }
        }
    }
    Ok(None)
}

pub fn is_admissible(m: &FourOneModulus, n: &FourOneModulus) -> Result<bool> {
    Ok(admissibility_failure(m, n)?.is_none())
}

fn as_i64(x: u64) -> i64 {
    i64::try_from(x).expect("inputs are below 2^48")
}

fn side(name: impl Into<String>, sign: Sign) -> (String, Sign) {
    (name.into(), sign)
}

fn jacobi_sign(x: i128, n: &FourOneModulus) -> Result<Sign> {
    let v = crate::arith::jacobi(x, n.value().into())?;
    Sign::from_jacobi(v).ok_or_else(|| Error::Invariant(format!("({x}/{n}) = 0")))
}

/// `(A + B√m / p)` against `(p/m)_4`.
pub fn verify_ec(m: &FourOneModulus, p: OddPrime) -> Result<LawReport> {
    let inputs = named(&[("m", as_i64(m.value())), ("p", as_i64(p.get()))]);
    let skip = |reason: String| Ok(LawReport::skipped(Law::Ec, inputs.clone(), reason));
    if p.get() % 4 != 1 {
        return skip(format!("{p} is not 1 mod 4"));
    }
    let pm = FourOneModulus::new(p.get())?;
    if let Some(reason) = admissibility_failure(m, &pm)? {
        return skip(reason);
    }
    let triple = alpha_triple(m)?;
    let sides = vec![
        side("alpha", eval_alpha_symbol(&triple, p)?),
        side("quartic", quartic_symbol_composite(p.get().into(), m)?),
    ];
    Ok(LawReport::checked(Law::Ec, inputs, sides))
}

fn burde_precheck(m: &FourOneModulus, n: &FourOneModulus) -> Result<Option<String>> {
    if m.is_even() || n.is_even() || m.value() == 1 || n.value() == 1 {
        return Ok(Some("moduli must be odd and exceed 1".into()));
    }
    admissibility_failure(m, n)
}

fn quartic_product(m: &FourOneModulus, n: &FourOneModulus) -> Result<Sign> {
    Ok(quartic_symbol_composite(m.value().into(), n)? * quartic_symbol_composite(n.value().into(), m)?)
}

/// `(m/n)_4 (n/m)_4 = (ac − bd / m) = (ac − bd / n)` with the canonical
/// representations `m = a² + b²`, `n = c² + d²`.
pub fn verify_burde(m: &FourOneModulus, n: &FourOneModulus) -> Result<LawReport> {
    let pair = named(&[("m", as_i64(m.value())), ("n", as_i64(n.value()))]);
    if let Some(reason) = burde_precheck(m, n)? {
        return Ok(LawReport::skipped(Law::Burde, pair, reason));
    }
    let rm = two_squares_composite(m)?;
    let rn = two_squares_composite(n)?;
    let (a, b, c, d) = (rm.a as i64, rm.b as i64, rn.a as i64, rn.b as i64);
    let x = i128::from(a) * i128::from(c) - i128::from(b) * i128::from(d);
    let mut inputs = pair;
    inputs.extend(named(&[("a", a), ("b", b), ("c", c), ("d", d)]));
    let sides = vec![
        side("quartic", quartic_product(m, n)?),
        side("jacobi_m", jacobi_sign(x, m)?),
        side("jacobi_n", jacobi_sign(x, n)?),
    ];
    Ok(LawReport::checked(Law::Burde, inputs, sides))
}

/// Burde's law over every primitive representation of `m` and `n` with
/// `a`, `c` odd, and every sign choice of `a, b, c, d`.
pub fn verify_burde_all_reps(m: &FourOneModulus, n: &FourOneModulus) -> Result<LawReport> {
    let inputs = named(&[("m", as_i64(m.value())), ("n", as_i64(n.value()))]);
    if let Some(reason) = burde_precheck(m, n)? {
        return Ok(LawReport::skipped(Law::Burde, inputs, reason));
    }
    let mut sides = vec![side("quartic", quartic_product(m, n)?)];
    let reps_m = all_two_squares(m.value())?;
    let reps_n = all_two_squares(n.value())?;
    for rm in &reps_m {
        for rn in &reps_n {
            for signs in 0u8..16 {
                let flip = |bit: u8, v: u64| {
                    if signs >> bit & 1 == 1 {
                        -i128::from(v)
                    } else {
                        i128::from(v)
                    }
                };
                let (a, b, c, d) = (flip(0, rm.a), flip(1, rm.b), flip(2, rn.a), flip(3, rn.b));
                let x = a * c - b * d;
                sides.push(side(format!("m[{a},{b},{c},{d}]"), jacobi_sign(x, m)?));
                sides.push(side(format!("n[{a},{b},{c},{d}]"), jacobi_sign(x, n)?));
            }
        }
    }
    Ok(LawReport::checked(Law::Burde, inputs, sides))
}

/// `(2/p)_4 = (−1)^b = (p/2)_4 (2 / a − 4b)` for `p = a² + 16b²`, `a ≡ 1 mod 4`.
pub fn verify_gauss2(p: OddPrime) -> Result<LawReport> {
    let p = p.require_one_mod(8)?;
    let rep = cornacchia_prime(p)?;
    if rep.b % 4 != 0 {
        return Err(Error::Invariant(format!(
            "{p} = {}^2 + {}^2 with b not divisible by 4",
            rep.a, rep.b
        )));
    }
    let b = (rep.b / 4) as i64;
    let a = if rep.a % 4 == 1 { rep.a as i64 } else { -(rep.a as i64) };
    let shifted = (a - 4 * b).unsigned_abs();
    let two_over_shifted =
        Sign::from_jacobi(jacobi_u64(2, shifted)).ok_or_else(|| Error::Invariant(format!("(2/{shifted}) = 0")))?;
    let inputs = named(&[("p", as_i64(p.get())), ("a", a), ("b", b)]);
    let sides = vec![
        side("quartic", quartic_symbol_prime(2, p)?),
        side("parity", Sign::from_parity(b % 2 == 1)),
        side("burde", quartic_symbol_two(p)? * two_over_shifted),
    ];
    Ok(LawReport::checked(Law::Gauss2, inputs, sides))
}

/// Memoized norm −1 units, shared read-only across sweep workers.
#[derive(Debug, Default)]
pub struct UnitTable {
    units: HashMap<u64, Result<PellUnit>>,
}

impl UnitTable {
    pub fn new() -> UnitTable {
        UnitTable::default()
    }

    pub fn insert(&mut self, m: &FourOneModulus) {
        self.units
            .entry(m.value())
            .or_insert_with(|| fundamental_negative_unit(m));
    }

    pub(crate) fn extend(&mut self, computed: impl IntoIterator<Item = (u64, Result<PellUnit>)>) {
        self.units.extend(computed);
    }

    pub fn unit(&self, m: &FourOneModulus) -> Cow<'_, Result<PellUnit>> {
        match self.units.get(&m.value()) {
            Some(u) => Cow::Borrowed(u),
            None => Cow::Owned(fundamental_negative_unit(m)),
        }
    }
}

fn unit_or_skip(table: &UnitTable, m: &FourOneModulus) -> Result<std::result::Result<PellUnit, String>> {
    match table.unit(m).into_owned() {
        Ok(u) => Ok(Ok(u)),
        Err(Error::NoNegativeNormUnit(v)) => Ok(Err(format!("no unit of norm -1 in Z[sqrt({v})]"))),
        Err(e) => Err(e),
    }
}

fn scholz_precheck(m: &FourOneModulus, n: &FourOneModulus) -> Result<Option<String>> {
    burde_precheck(m, n)
}

/// `(ε_m/n) = (m/n)_4 (n/m)_4`.
pub fn verify_scholz(m: &FourOneModulus, n: &FourOneModulus) -> Result<LawReport> {
    verify_scholz_with(m, n, &UnitTable::new())
}

pub fn verify_scholz_with(m: &FourOneModulus, n: &FourOneModulus, units: &UnitTable) -> Result<LawReport> {
    let inputs = named(&[("m", as_i64(m.value())), ("n", as_i64(n.value()))]);
    if let Some(reason) = scholz_precheck(m, n)? {
        return Ok(LawReport::skipped(Law::Scholz, inputs, reason));
    }
    let e = match unit_or_skip(units, m)? {
        Ok(e) => e,
        Err(reason) => return Ok(LawReport::skipped(Law::Scholz, inputs, reason)),
    };
    let sides = vec![
        side("unit", eval_unit_symbol_composite(&e, n)?),
        side("quartic", quartic_product(m, n)?),
    ];
    Ok(LawReport::checked(Law::Scholz, inputs, sides))
}

/// `(ε_m/n) = (ε_n/m)` when both units exist.
pub fn verify_scholz_mutual(m: &FourOneModulus, n: &FourOneModulus) -> Result<LawReport> {
    verify_scholz_mutual_with(m, n, &UnitTable::new())
}

pub fn verify_scholz_mutual_with(m: &FourOneModulus, n: &FourOneModulus, units: &UnitTable) -> Result<LawReport> {
    let inputs = named(&[("m", as_i64(m.value())), ("n", as_i64(n.value()))]);
    if let Some(reason) = scholz_precheck(m, n)? {
        return Ok(LawReport::skipped(Law::ScholzMutual, inputs, reason));
    }
    let (em, en) = match (unit_or_skip(units, m)?, unit_or_skip(units, n)?) {
        (Ok(em), Ok(en)) => (em, en),
        (Err(reason), _) | (_, Err(reason)) => return Ok(LawReport::skipped(Law::ScholzMutual, inputs, reason)),
    };
    let sides = vec![
        side("unit_m", eval_unit_symbol_composite(&em, n)?),
        side("unit_n", eval_unit_symbol_composite(&en, m)?),
    ];
    Ok(LawReport::checked(Law::ScholzMutual, inputs, sides))
}

/// Unordered splits `m = r·s` into coprime factors `1 < r < s`.
pub fn two_part_splits(m: &FourOneModulus) -> Vec<(FourOneModulus, FourOneModulus)> {
    let primes = m.odd_primes();
    if m.is_even() || primes.len() < 2 {
        return Vec::new();
    }
    let last = primes.len() - 1;
    let mut splits = Vec::new();
    for mask in 1u32..(1 << last) {
        let r: u64 = (0..last)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| primes[i].get())
            .product();
        let s = m.value() / r;
        let (r, s) = (r.min(s), r.max(s));
        splits.push((
            FourOneModulus::new(r).expect("divisor of a modulus"),
            FourOneModulus::new(s).expect("divisor of a modulus"),
        ));
    }
    splits.sort_by_key(|(r, _)| r.value());
    splits
}

/// `(ε_m/n) = Π (ε_{p_j}/n)`.
pub fn verify_furuta(m: &FourOneModulus, n: &FourOneModulus) -> Result<LawReport> {
    verify_furuta_with(m, n, &UnitTable::new(), false)
}

/// As [`verify_furuta`], plus a side `(ε_r/n)(ε_s/n)` for every split
/// `m = rs` whose two units exist.
pub fn verify_furuta_splits(m: &FourOneModulus, n: &FourOneModulus) -> Result<LawReport> {
    verify_furuta_with(m, n, &UnitTable::new(), true)
}

pub fn verify_furuta_with(
    m: &FourOneModulus,
    n: &FourOneModulus,
    units: &UnitTable,
    splits: bool,
) -> Result<LawReport> {
    let inputs = named(&[("m", as_i64(m.value())), ("n", as_i64(n.value()))]);
    if let Some(reason) = scholz_precheck(m, n)? {
        return Ok(LawReport::skipped(Law::Furuta, inputs, reason));
    }
    let e = match unit_or_skip(units, m)? {
        Ok(e) => e,
        Err(reason) => return Ok(LawReport::skipped(Law::Furuta, inputs, reason)),
    };
    let mut sides = vec![side("unit", eval_unit_symbol_composite(&e, n)?)];
    let mut product = Sign::Plus;
    for &p in m.odd_primes() {
        let pm = FourOneModulus::new(p.get())?;
        let ep = units.unit(&pm).into_owned()?;
        product *= eval_unit_symbol_composite(&ep, n)?;
    }
    sides.push(side("prime_product", product));
    let splits = if splits { two_part_splits(m) } else { Vec::new() };
    for (r, s) in splits {
        if let (Ok(Ok(er)), Ok(Ok(es))) = (unit_or_skip(units, &r), unit_or_skip(units, &s)) {
            let value = eval_unit_symbol_composite(&er, n)? * eval_unit_symbol_composite(&es, n)?;
            sides.push(side(format!("split_{r}x{s}"), value));
        }
    }
    Ok(LawReport::checked(Law::Furuta, inputs, sides))
}

/// Options for the single-instance dispatcher.
#[derive(Debug, Clone, Copy, Default)]
pub struct VerifyOptions {
    pub oracle: bool,
    /// `burde`: every representation and sign choice.
    pub all_reps: bool,
    /// `furuta`: add the two-factor split sides.
    pub splits: bool,
}

/// Runs one law on raw integers. `gauss2` reads its prime from `n`.
pub fn verify(law: Law, m: u64, n: u64, opts: VerifyOptions) -> Result<LawReport> {
    let mut report = match law {
        Law::Gauss2 => verify_gauss2(OddPrime::new(n)?)?,
        Law::Ec => verify_ec(&FourOneModulus::new(m)?, OddPrime::new(n)?)?,
        _ => {
            let (mm, nn) = (FourOneModulus::new(m)?, FourOneModulus::new(n)?);
            match law {
                Law::Burde if opts.all_reps => verify_burde_all_reps(&mm, &nn)?,
                Law::Burde => verify_burde(&mm, &nn)?,
                Law::Scholz => verify_scholz(&mm, &nn)?,
                Law::ScholzMutual => verify_scholz_mutual(&mm, &nn)?,
                Law::Furuta if opts.splits => verify_furuta_splits(&mm, &nn)?,
                Law::Furuta => verify_furuta(&mm, &nn)?,
                Law::Ec | Law::Gauss2 => unreachable!(),
            }
        }
    };
    if opts.oracle {
        append_oracle_sides(&mut report)?;
    }
    Ok(report)
}
