//! Truncated Laurent series with exact rational coefficients.
//!
//! Series live in one quantum variable q (two-sided integer window) and a
//! monoid of effective class weights (nonnegative integer vectors over a
//! finite declared class set, capped by total weight). The module
//! implements the product-expansion identity for stable-pair series, the
//! per-wall exponential factors, the telescoped comparison between the
//! two, and the DT/PT transform by the MacMahon function. Every
//! coefficient comparison is an exact rational equality; there is no
//! tolerance anywhere in this module.

use std::collections::BTreeMap;

use num::{Signed, Zero};
use crate::arith::{rat_display, rat_int, Rat};
use crate::error::{Error, Result};

/// Weight vector over the declared effective classes.
pub type Weight = Vec<u32>;

fn weight_total(w: &Weight) -> u32 {
    w.iter().sum()
}

/// Laurent polynomial in q graded by capped class weights. Normal form:
/// no stored zeros, nothing outside the window or above the weight cap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    num_classes: usize,
    n_min: i64,
    n_max: i64,
    t_cap: u32,
    coeffs: BTreeMap<(Weight, i64), Rat>,
}

impl TruncatedSeries {
    pub fn zero(num_classes: usize, window: (i64, i64), t_cap: u32) -> Result<TruncatedSeries> {
        if window.0 > window.1 {
            return Err(Error::input("empty q-window"));
        }
        Ok(TruncatedSeries {
            num_classes,
            n_min: window.0,
            n_max: window.1,
            t_cap,
            coeffs: BTreeMap::new(),
        })
    }

    pub fn one(num_classes: usize, window: (i64, i64), t_cap: u32) -> Result<TruncatedSeries> {
        let mut s = TruncatedSeries::zero(num_classes, window, t_cap)?;
        s.add_term(vec![0; num_classes], 0, rat_int(1));
        Ok(s)
    }

    pub fn num_classes(&self) -> usize {
        self.num_classes
    }

    pub fn window(&self) -> (i64, i64) {
        (self.n_min, self.n_max)
    }

    pub fn t_cap(&self) -> u32 {
        self.t_cap
    }

    /// Adds a term, silently dropping anything outside the truncation.
    pub fn add_term(&mut self, weight: Weight, n: i64, value: Rat) {
        debug_assert_eq!(weight.len(), self.num_classes);
        if value.is_zero() || n < self.n_min || n > self.n_max || weight_total(&weight) > self.t_cap
        {
            return;
        }
        let key = (weight, n);
        let entry = self.coeffs.entry(key.clone()).or_insert_with(Rat::zero);
        *entry += value;
        if entry.is_zero() {
            self.coeffs.remove(&key);
        }
    }

    pub fn coeff(&self, weight: &Weight, n: i64) -> Rat {
        self.coeffs
            .get(&(weight.clone(), n))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, i64, &Rat)> {
        self.coeffs.iter().map(|((w, n), v)| (w, *n, v))
    }

    /// Terms sorted by (total weight, weight vector, q-power) — the dump
    /// order used by every report.
    pub fn terms_sorted(&self) -> Vec<(Weight, i64, Rat)> {
        let mut out: Vec<(Weight, i64, Rat)> = self
            .coeffs
            .iter()
            .map(|((w, n), v)| (w.clone(), *n, v.clone()))
            .collect();
        out.sort_by(|a, b| {
            (weight_total(&a.0), &a.0, a.1).cmp(&(weight_total(&b.0), &b.0, b.1))
        });
        out
    }

    /// Re-truncates to a smaller (or equal) window and cap.
    pub fn truncate(&self, window: (i64, i64), t_cap: u32) -> Result<TruncatedSeries> {
        let mut out = TruncatedSeries::zero(self.num_classes, window, t_cap)?;
        for ((w, n), v) in &self.coeffs {
            out.add_term(w.clone(), *n, v.clone());
        }
        Ok(out)
    }

    pub fn add(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        let (window, t_cap) = self.common_truncation(other)?;
        let mut out = TruncatedSeries::zero(self.num_classes, window, t_cap)?;
        for ((w, n), v) in self.coeffs.iter().chain(other.coeffs.iter()) {
            out.add_term(w.clone(), *n, v.clone());
        }
        Ok(out)
    }

    fn common_truncation(&self, other: &TruncatedSeries) -> Result<((i64, i64), u32)> {
        if self.num_classes != other.num_classes {
            return Err(Error::input("series are graded by different class sets"));
        }
        let window = (self.n_min.max(other.n_min), self.n_max.min(other.n_max));
        if window.0 > window.1 {
            return Err(Error::input("q-windows do not intersect"));
        }
        Ok((window, self.t_cap.min(other.t_cap)))
    }

    /// First key (dump order) where the two series disagree.
    pub fn first_discrepancy(&self, other: &TruncatedSeries) -> Option<(Weight, i64, Rat, Rat)> {
        let mut keys: Vec<&(Weight, i64)> =
            self.coeffs.keys().chain(other.coeffs.keys()).collect();
        keys.sort_by(|a, b| (weight_total(&a.0), &a.0, a.1).cmp(&(weight_total(&b.0), &b.0, b.1)));
        keys.dedup();
        for key in keys {
            let lhs = self.coeff(&key.0, key.1);
            let rhs = other.coeff(&key.0, key.1);
            if lhs != rhs {
                return Some((key.0.clone(), key.1, lhs, rhs));
            }
        }
        None
    }
}

/// Truncated Cauchy product on the intersection of the windows and the
/// smaller weight cap. Associative and commutative up to truncation.
pub fn series_mul(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries> {
    let (window, t_cap) = a.common_truncation(b)?;
    Ok(product_into(
        a.coeffs.iter(),
        b.coeffs.iter(),
        a.num_classes,
        window,
        t_cap,
    ))
}

/// Exact product of two term lists, truncated into the given window.
fn product_into<'a, 'b>(
    a: impl Iterator<Item = (&'a (Weight, i64), &'a Rat)> + Clone,
    b: impl Iterator<Item = (&'b (Weight, i64), &'b Rat)> + Clone,
    num_classes: usize,
    window: (i64, i64),
    t_cap: u32,
) -> TruncatedSeries {
    let mut out = TruncatedSeries {
        num_classes,
        n_min: window.0,
        n_max: window.1,
        t_cap,
        coeffs: BTreeMap::new(),
    };
    for ((wa, na), va) in a {
        for ((wb, nb), vb) in b.clone() {
            let n = na + nb;
            if n < window.0 || n > window.1 {
                continue;
            }
            let total = weight_total(wa) + weight_total(wb);
            if total > t_cap {
                continue;
            }
            let w: Weight = wa.iter().zip(wb).map(|(x, y)| x + y).collect();
            out.add_term(w, n, va * vb);
        }
    }
    out
}

/// A table of exact coefficients keyed by (class weight, q-power).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CoeffTable {
    pub entries: BTreeMap<(Weight, i64), Rat>,
}

impl CoeffTable {
    pub fn new() -> CoeffTable {
        CoeffTable::default()
    }

    pub fn set(&mut self, weight: Weight, n: i64, value: Rat) {
        if value.is_zero() {
            self.entries.remove(&(weight, n));
        } else {
            self.entries.insert((weight, n), value);
        }
    }

    pub fn get(&self, weight: &Weight, n: i64) -> Rat {
        self.entries
            .get(&(weight.clone(), n))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    /// True iff the table is invariant under n -> -n: the coefficient-level
    /// statement of the q <-> 1/q symmetry.
    pub fn is_palindromic(&self) -> bool {
        self.entries
            .iter()
            .all(|((w, n), v)| self.get(w, -n) == *v)
    }
}

/// Invariance of a table under negating the q-power.
pub fn palindrome_check(table: &CoeffTable) -> bool {
    table.is_palindromic()
}

/// One contribution to a wall: a class weight with its exact degree
/// against the polarization, a positive q-power, and a rational invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WallContribution {
    pub weight: Weight,
    pub omega_beta: Rat,
    pub n: i64,
    pub value: Rat,
}

/// A positive wall with the contributions sitting exactly on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WallDatum {
    pub t: Rat,
    pub contributions: Vec<WallContribution>,
}

impl WallDatum {
    pub fn new(t: Rat, contributions: Vec<WallContribution>) -> Result<WallDatum> {
        if !t.is_positive() {
            return Err(Error::input("wall parameter t must be positive"));
        }
        for c in &contributions {
            if weight_total(&c.weight) == 0 {
                return Err(Error::input("wall contributions must have nonzero class weight"));
            }
            if !c.omega_beta.is_positive() {
                return Err(Error::input("wall contributions must have positive degree"));
            }
            if c.n <= 0 {
                return Err(Error::input("wall contributions must have positive q-power"));
            }
            if rat_int(c.n) / &c.omega_beta != t {
                return Err(Error::input(format!(
                    "contribution n={} over degree {} does not sit on the wall t={}",
                    c.n,
                    rat_display(&c.omega_beta),
                    rat_display(&t),
                )));
            }
        }
        Ok(WallDatum { t, contributions })
    }
}

fn factorial(k: u32) -> Rat {
    let mut acc = rat_int(1);
    for i in 2..=k as i64 {
        acc *= rat_int(i);
    }
    acc
}

/// exp of a series with strictly positive minimal class weight: the sum
/// terminates at the weight cap because the argument is nilpotent under
/// truncation.
fn exp_nilpotent(arg: &TruncatedSeries) -> Result<TruncatedSeries> {
    if arg.coeffs.keys().any(|(w, _)| weight_total(w) == 0) {
        return Err(Error::input("exponential argument must have positive class weight"));
    }
    let mut result = TruncatedSeries::one(arg.num_classes, arg.window(), arg.t_cap)?;
    let mut power = TruncatedSeries::one(arg.num_classes, arg.window(), arg.t_cap)?;
    for k in 1..=arg.t_cap {
        power = series_mul(&power, arg)?;
        if power.is_zero() {
            break;
        }
        let inv_fact = rat_int(1) / factorial(k);
        for ((w, n), v) in &power.coeffs {
            result.add_term(w.clone(), *n, v * &inv_fact);
        }
    }
    Ok(result)
}

/// Signed exponential argument of a wall or of a whole table:
/// sum of (-1)^(n-1) n N q^n t^beta over the entries.
fn signed_argument<'a>(
    entries: impl Iterator<Item = (&'a Weight, i64, &'a Rat)>,
    num_classes: usize,
    window: (i64, i64),
    t_cap: u32,
) -> Result<TruncatedSeries> {
    let mut arg = TruncatedSeries::zero(num_classes, window, t_cap)?;
    for (w, n, value) in entries {
        if w.len() != num_classes {
            return Err(Error::input("table weight length mismatch"));
        }
        if n <= 0 || weight_total(w) == 0 {
            return Err(Error::input(
                "exponential entries need positive q-power and positive class weight",
            ));
        }
        let sign = if n % 2 == 1 { 1 } else { -1 };
        arg.add_term(w.clone(), n, rat_int(sign * n) * value);
    }
    Ok(arg)
}

/// The multiplicative factor attached to one wall:
/// exp( sum over contributions of (-1)^(n-1) n N q^n t^beta ), truncated.
pub fn wall_factor(
    wd: &WallDatum,
    num_classes: usize,
    window: (i64, i64),
    t_cap: u32,
) -> Result<TruncatedSeries> {
    for c in &wd.contributions {
        if c.weight.len() != num_classes {
            return Err(Error::input("wall contribution weight length mismatch"));
        }
    }
    let arg = signed_argument(
        wd.contributions.iter().map(|c| (&c.weight, c.n, &c.value)),
        num_classes,
        window,
        t_cap,
    )?;
    exp_nilpotent(&arg)
}

/// Crossing one wall multiplies the running series by the wall factor.
/// Inverted exactly by the factor with negated invariants.
pub fn apply_wall_crossing(series: &TruncatedSeries, wd: &WallDatum) -> Result<TruncatedSeries> {
    let factor = wall_factor(wd, series.num_classes(), series.window(), series.t_cap())?;
    series_mul(&factor, series)
}

/// Builds the unit-normalized series 1 + sum of table entries (entries must
/// have positive class weight; the weight-zero constant is fixed to 1).
fn unit_plus_table(
    table: &CoeffTable,
    num_classes: usize,
    window: (i64, i64),
    t_cap: u32,
) -> Result<TruncatedSeries> {
    let mut s = TruncatedSeries::one(num_classes, window, t_cap)?;
    for ((w, n), v) in &table.entries {
        if w.len() != num_classes {
            return Err(Error::input("table weight length mismatch"));
        }
        if weight_total(w) == 0 {
            return Err(Error::input(
                "table entries must carry positive class weight; the constant term is fixed to 1",
            ));
        }
        s.add_term(w.clone(), *n, v.clone());
    }
    Ok(s)
}

/// Product expansion: the full pair-counting series as
/// exp( sum_{beta>0, n>0} (-1)^(n-1) n N q^n t^beta ) * (1 + sum L q^n t^beta).
/// The L table must be symmetric under n -> -n. The coefficient of
/// q^n t^beta in the output is the pair invariant at (n, beta).
pub fn pt_product_formula(
    n_table: &CoeffTable,
    l_table: &CoeffTable,
    num_classes: usize,
    window: (i64, i64),
    t_cap: u32,
) -> Result<TruncatedSeries> {
    if !l_table.is_palindromic() {
        return Err(Error::precondition("L table must be symmetric under n -> -n"));
    }
    // The exponential lives on n >= 0. Cross terms against negative-n table
    // entries of L can land back inside the window, so the factor is built
    // on an extended window before the final truncation.
    let min_l = l_table
        .entries
        .keys()
        .map(|(_, n)| *n)
        .min()
        .unwrap_or(0)
        .min(0);
    let ext_window = (0, window.1 - min_l);
    if ext_window.1 < 0 {
        return TruncatedSeries::zero(num_classes, window, t_cap);
    }
    let arg = signed_argument(
        n_table.entries.iter().map(|((w, n), v)| (w, *n, v)),
        num_classes,
        ext_window,
        t_cap,
    )?;
    let factor = exp_nilpotent(&arg)?;
    let l_series = unit_plus_table(l_table, num_classes, (min_l, window.1.max(0)), t_cap)?;
    Ok(product_into(
        factor.coeffs.iter(),
        l_series.coeffs.iter(),
        num_classes,
        window,
        t_cap,
    ))
}

/// Outcome of the telescoped wall-product comparison.
#[derive(Debug, Clone, serde::Serialize, serde::Deserialize)]
pub struct TelescopeReport {
    pub matches: bool,
    /// First differing key in dump order: weight, q-power, product value,
    /// closed-form value.
    pub discrepancy: Option<(Weight, i64, String, String)>,
}

/// Applies the wall factors (descending t) to the small-t series and
/// compares with the closed product expansion, coefficient by coefficient.
pub fn telescope_check(
    n_table: &CoeffTable,
    l_plus_table: &CoeffTable,
    walls: &[WallDatum],
    num_classes: usize,
    window: (i64, i64),
    t_cap: u32,
) -> Result<TelescopeReport> {
    for pair in walls.windows(2) {
        if pair[0].t <= pair[1].t {
            return Err(Error::input("walls must be sorted by strictly descending t"));
        }
    }
    let min_l = l_plus_table
        .entries
        .keys()
        .map(|(_, n)| *n)
        .min()
        .unwrap_or(0)
        .min(0);
    let ext_window = (min_l, window.1.max(0));
    let mut lhs = unit_plus_table(l_plus_table, num_classes, ext_window, t_cap)?;
    for wd in walls {
        lhs = apply_wall_crossing(&lhs, wd)?;
    }
    let lhs = lhs.truncate(window, t_cap)?;
    let rhs = pt_product_formula(n_table, l_plus_table, num_classes, window, t_cap)?;
    let discrepancy = lhs
        .first_discrepancy(&rhs)
        .map(|(w, n, a, b)| (w, n, rat_display(&a), rat_display(&b)));
    Ok(TelescopeReport { matches: discrepancy.is_none(), discrepancy })
}

/// (1 - q^step)^exponent as a single-variable term list, truncated at q_max.
fn binomial_power(step: i64, exponent: i64, q_max: i64) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(0, (0, q_max), 0).expect("valid window");
    if exponent >= 0 {
        // finite binomial sum with alternating signs
        let mut coeff = rat_int(1);
        let mut j: i64 = 0;
        while j * step <= q_max && j <= exponent {
            let signed = if j % 2 == 0 { coeff.clone() } else { -coeff.clone() };
            s.add_term(vec![], j * step, signed);
            coeff = coeff * rat_int(exponent - j) / rat_int(j + 1);
            j += 1;
        }
    } else {
        // (1 - x)^(-k) = sum C(k + j - 1, j) x^j with k = -exponent > 0
        let k = -exponent;
        let mut coeff = rat_int(1);
        let mut j: i64 = 0;
        while j * step <= q_max {
            s.add_term(vec![], j * step, coeff.clone());
            coeff = coeff * rat_int(k + j) / rat_int(j + 1);
            j += 1;
        }
    }
    s
}

/// prod_{n >= 1} (1 - q^n)^(-n e), truncated at q^q_max. Integer
/// coefficients; e = 1 is the plane-partition generating series.
pub fn mac_mahon(e: i64, q_max: u32) -> TruncatedSeries {
    let q_max = q_max as i64;
    let mut acc = TruncatedSeries::one(0, (0, q_max), 0).expect("valid window");
    for n in 1..=q_max {
        let factor = binomial_power(n, -n * e, q_max);
        acc = series_mul(&acc, &factor).expect("windows agree");
    }
    acc
}

/// DT/PT transform: multiplies the series by the MacMahon factor with
/// exponent e, per fixed class weight. e = 0 is the identity.
pub fn dtpt_transform(p_series: &TruncatedSeries, e: i64) -> Result<TruncatedSeries> {
    let (n_min, n_max) = p_series.window();
    let span = (n_max - n_min).max(0) as u32;
    let m = mac_mahon(e, span);
    // re-grade the single-variable factor into the series' class monoid
    let zero_w = vec![0u32; p_series.num_classes()];
    let m_terms: Vec<((Weight, i64), Rat)> = m
        .coeffs
        .iter()
        .map(|((_, n), v)| ((zero_w.clone(), *n), v.clone()))
        .collect();
    Ok(product_into(
        m_terms.iter().map(|(k, v)| (k, v)),
        p_series.coeffs.iter(),
        p_series.num_classes(),
        p_series.window(),
        p_series.t_cap(),
    ))
}
