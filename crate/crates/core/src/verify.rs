//! Exhaustive checks of the identities proved about regular partitions and
//! Hall–Littlewood functions at roots of unity, over configurable ranges.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::chartable::{part_product_over, verify_detchain, verify_full_table, verify_olsson};
use crate::cyclotomic::CyclotomicNumber;
use crate::error::{Error, Result};
use crate::glaisher::{g_stats, glaisher_forward, glaisher_inverse};
use crate::partition::{enumerate_class_regular, enumerate_partitions, enumerate_regular, is_regular, ModulusTuple, Partition};
use crate::poly::Poly;
use crate::ratfunc::RationalFunction;
use crate::scalar::Scalar;
use crate::series::{phi, phi_inclusion_exclusion, series_c, series_rp, series_v, series_w_orbit_sum, series_x, series_y};
use crate::stats::{stat_a, stat_b, stat_c, stat_x, stat_y, v_table, w_table};
use crate::symfunc::hall_littlewood::{family_in_p, hl_p, hl_q, hl_qprime, l_matrix, transition_matrix, Family};
use crate::symfunc::{complete_h, hall_inner, InnerParam, SymFunc};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Thm21,
    Thm22,
    Thm23,
    Thm41,
    Prop31,
    Prop32,
    Lem44,
    Prop45,
    Prop43,
    Prop48,
    Thm49,
    Thm410,
    Detchain,
}

impl Suite {
    pub const ALL: [Suite; 13] = [
        Suite::Thm21,
        Suite::Thm22,
        Suite::Thm23,
        Suite::Thm41,
        Suite::Prop31,
        Suite::Prop32,
        Suite::Lem44,
        Suite::Prop45,
        Suite::Prop43,
        Suite::Prop48,
        Suite::Thm49,
        Suite::Thm410,
        Suite::Detchain,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Thm21 => "thm21",
            Suite::Thm22 => "thm22",
            Suite::Thm23 => "thm23",
            Suite::Thm41 => "thm41",
            Suite::Prop31 => "prop31",
            Suite::Prop32 => "prop32",
            Suite::Lem44 => "lem44",
            Suite::Prop45 => "prop45",
            Suite::Prop43 => "prop43",
            Suite::Prop48 => "prop48",
            Suite::Thm49 => "thm49",
            Suite::Thm410 => "thm410",
            Suite::Detchain => "detchain",
        }
    }

    /// Whether the suite is parametrized by modulus tuples (otherwise by a single `r`).
    pub fn uses_tuples(self) -> bool {
        matches!(self, Suite::Thm21 | Suite::Thm22 | Suite::Thm23 | Suite::Prop31 | Suite::Prop32)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

/// Ranges a suite runs over.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyConfig {
    /// Modulus tuples, for the tuple-parametrized suites.
    pub moduli: Vec<ModulusTuple>,
    /// Single moduli `r`, for the others.
    pub rs: Vec<u64>,
    pub min_n: usize,
    pub max_n: usize,
}

impl VerifyConfig {
    pub fn default_for(suite: Suite) -> Self {
        let (rs, max_n) = match suite {
            Suite::Thm21 | Suite::Thm22 | Suite::Thm23 | Suite::Prop31 | Suite::Prop32 => (vec![], 20),
            Suite::Thm41 => (vec![2, 3, 4, 5, 7], 20),
            Suite::Thm410 => (vec![2, 3, 5], 8),
            _ => (vec![2, 3], 6),
        };
        let moduli = if suite.uses_tuples() { default_moduli_sweep() } else { vec![] };
        VerifyConfig { moduli, rs, min_n: 0, max_n }
    }
}

/// Every ordered pairwise-coprime tuple of length at most 3 drawn from `{2,3,4,5,7,9}`.
pub fn default_moduli_sweep() -> Vec<ModulusTuple> {
    const POOL: [u64; 6] = [2, 3, 4, 5, 7, 9];
    let mut out = Vec::new();
    let mut stack: Vec<Vec<u64>> = POOL.iter().map(|&r| vec![r]).collect();
    while let Some(cur) = stack.pop() {
        let Ok(tuple) = ModulusTuple::new(cur.clone()) else { continue };
        out.push(tuple);
        if cur.len() < 3 {
            for &r in &POOL {
                if !cur.contains(&r) {
                    let mut next = cur.clone();
                    next.push(r);
                    stack.push(next);
                }
            }
        }
    }
    out.sort_by(|a, b| (a.len(), a.moduli()).cmp(&(b.len(), b.moduli())));
    out
}

/// One checked instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub label: String,
    pub holds: bool,
    pub values: BTreeMap<String, String>,
}

impl CheckEntry {
    fn new(label: impl Into<String>, holds: bool) -> Self {
        CheckEntry { label: label.into(), holds, values: BTreeMap::new() }
    }

    fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.values.insert(key.to_string(), value.to_string());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suite: Suite,
    pub config: VerifyConfig,
    pub checks: usize,
    pub failures: usize,
    pub passed: bool,
    pub first_counterexample: Option<CheckEntry>,
    pub entries: Vec<CheckEntry>,
}

impl VerifyReport {
    fn from_entries(suite: Suite, config: VerifyConfig, entries: Vec<CheckEntry>) -> Self {
        let failures = entries.iter().filter(|e| !e.holds).count();
        VerifyReport {
            suite,
            config,
            checks: entries.len(),
            failures,
            passed: failures == 0,
            first_counterexample: entries.iter().find(|e| !e.holds).cloned(),
            entries,
        }
    }
}

pub fn run_suite(suite: Suite, config: &VerifyConfig) -> Result<VerifyReport> {
    let mut entries = Vec::new();
    let ns = config.min_n..=config.max_n;
    if suite.uses_tuples() {
        for moduli in &config.moduli {
            match suite {
                Suite::Thm21 => entries.extend(check_thm21(moduli, config.min_n, config.max_n)?),
                Suite::Thm22 => {
                    for n in ns.clone() {
                        entries.push(check_thm22(moduli, n)?);
                    }
                }
                Suite::Thm23 => entries.extend(check_thm23(moduli, config.min_n, config.max_n)?),
                Suite::Prop31 => entries.extend(check_prop31(moduli, config.min_n, config.max_n)),
                Suite::Prop32 => {
                    for n in ns.clone() {
                        entries.push(check_prop32(moduli, n)?);
                    }
                }
                _ => unreachable!("tuple suites only"),
            }
        }
    } else {
        let mut generic_done = BTreeSet::new();
        let mut full_table_done = BTreeSet::new();
        for &r in &config.rs {
            for n in ns.clone() {
                match suite {
                    Suite::Thm41 => entries.extend(check_thm41(r, n)?),
                    Suite::Lem44 => entries.extend(check_lem44(r, n)?),
                    Suite::Prop45 => entries.extend(check_prop45(r, n)?),
                    Suite::Prop43 => entries.extend(check_prop43(r, n)?),
                    Suite::Prop48 => {
                        entries.push(check_prop48(r, n)?);
                        if generic_done.insert(n) && n <= 5 {
                            entries.extend(check_generic_orthogonality(n)?);
                        }
                    }
                    Suite::Thm49 => entries.push(check_thm49(r, n)?),
                    Suite::Thm410 => {
                        let rep = verify_olsson(r, n)?;
                        entries.push(
                            CheckEntry::new(format!("r={r} n={n} regular table"), rep.holds)
                                .with("det", &rep.det)
                                .with("predicted_magnitude", &rep.predicted_magnitude)
                                .with("sign", rep.sign),
                        );
                        if full_table_done.insert(n) {
                            let full = verify_full_table(n)?;
                            entries.push(
                                CheckEntry::new(format!("n={n} full table"), full.holds)
                                    .with("det", &full.det)
                                    .with("predicted_det_squared", &full.predicted),
                            );
                        }
                    }
                    Suite::Detchain => {
                        let rep = verify_detchain(r, n)?;
                        entries.push(
                            CheckEntry::new(format!("r={r} n={n}"), rep.holds)
                                .with("c", rep.c)
                                .with("det_s_qprime_squared", &rep.det_s_qprime_squared)
                                .with("det_qprime_p_squared", &rep.det_qprime_p_squared)
                                .with("predicted_qprime_p_squared", &rep.predicted_qprime_p_squared)
                                .with("det_s_p_squared", &rep.det_s_p_squared)
                                .with("entries_match_table", rep.entries_match_table),
                        );
                    }
                    _ => unreachable!("single-modulus suites only"),
                }
            }
        }
    }
    Ok(VerifyReport::from_entries(suite, config.clone(), entries))
}

/// `V_j = Σ_k W_{r̲^k j}` by enumeration for each `n`, and as series identities.
pub fn check_thm21(moduli: &ModulusTuple, min_n: usize, max_n: usize) -> Result<Vec<CheckEntry>> {
    let mut entries = Vec::new();
    for n in min_n..=max_n {
        let v = v_table(moduli, n).values;
        let w = w_table(moduli, n).values;
        let bad = (1..=n as u64).filter(|&j| moduli.avoids(j)).find(|&j| {
            let orbit: u64 = moduli
                .exponent_vectors(j, n as u64)
                .iter()
                .map(|k| w[&(moduli.power(k) * j)])
                .sum();
            v[&j] != orbit
        });
        let mut e = CheckEntry::new(format!("{moduli} n={n} enumeration"), bad.is_none());
        if let Some(j) = bad {
            e = e.with("j", j);
        }
        entries.push(e);
    }
    for j in (1..=max_n as u64).filter(|&j| moduli.avoids(j)) {
        let sv = series_v(moduli, j, max_n)?;
        let sw = series_w_orbit_sum(moduli, j, max_n)?;
        let mut holds = sv == sw;
        // enumeration and series agree coefficientwise too
        let counts = sv.counts()?;
        for n in min_n.max(j as usize)..=max_n {
            holds &= counts[n] == v_table(moduli, n).values[&j];
        }
        entries.push(CheckEntry::new(format!("{moduli} j={j} series to q^{max_n}"), holds));
    }
    Ok(entries)
}

/// `c_{r_i,n}` three ways: the weighted `W` sum, the generating function, and the
/// Glaisher step count `Σ_{ρ ∈ CP} G(ρ)` with `r_i` in the leading role.
pub fn c_three_ways(moduli: &ModulusTuple, i: usize, n: usize) -> Result<[u64; 3]> {
    let by_sum = stat_c(moduli, i, n)?;
    let by_series = series_c(moduli, i, n)?.counts()?[n];
    let ri = moduli.moduli()[i - 1];
    let by_glaisher = enumerate_class_regular(moduli, n).iter().map(|rho| g_stats(rho, ri).total).sum();
    Ok([by_sum, by_series, by_glaisher])
}

/// `b = ∏ r_i^{c_i} · a`, with `c_i` agreeing across three computations.
pub fn check_thm22(moduli: &ModulusTuple, n: usize) -> Result<CheckEntry> {
    let a = stat_a(moduli, n);
    let b = stat_b(moduli, n);
    let mut rhs = a.clone();
    let mut agree = true;
    let mut cs = Vec::new();
    for (idx, &r) in moduli.moduli().iter().enumerate() {
        let c = c_three_ways(moduli, idx + 1, n)?;
        agree &= c[0] == c[1] && c[1] == c[2];
        rhs *= BigUint::from(r).pow(u32::try_from(c[0]).expect("small c"));
        cs.push(format!("{}/{}/{}", c[0], c[1], c[2]));
    }
    Ok(CheckEntry::new(format!("{moduli} n={n}"), agree && rhs == b)
        .with("a", &a)
        .with("b", &b)
        .with("c", cs.join(",")))
}

/// The generating function of every `c_{r_i,n}` against direct computation.
pub fn check_thm23(moduli: &ModulusTuple, min_n: usize, max_n: usize) -> Result<Vec<CheckEntry>> {
    let mut entries = Vec::new();
    for i in 1..=moduli.len() {
        let counts = series_c(moduli, i, max_n)?.counts()?;
        for n in min_n..=max_n {
            let direct = stat_c(moduli, i, n)?;
            entries.push(
                CheckEntry::new(format!("{moduli} i={i} n={n}"), counts[n] == direct)
                    .with("series", counts[n])
                    .with("direct", direct),
            );
        }
    }
    Ok(entries)
}

/// `|RP_{s̲,n}|` is the same for every reordering `s̲`, and equals `|CP_{r̲,n}|`.
pub fn check_prop31(moduli: &ModulusTuple, min_n: usize, max_n: usize) -> Vec<CheckEntry> {
    let phi_a = phi(moduli, max_n);
    let phi_b = phi_inclusion_exclusion(moduli, max_n);
    let rp_series = series_rp(moduli, max_n);
    let mut entries = vec![CheckEntry::new(
        format!("{moduli} generating functions to q^{max_n}"),
        phi_a == phi_b && phi_a == rp_series,
    )];
    let counts = phi_a.counts().expect("integral");
    for n in min_n..=max_n {
        let cp = enumerate_class_regular(moduli, n).len() as u64;
        let sizes: Vec<u64> = moduli.permutations().iter().map(|s| enumerate_regular(s, n).len() as u64).collect();
        let holds = sizes.iter().all(|&s| s == cp) && counts[n] == cp;
        entries.push(CheckEntry::new(format!("{moduli} n={n}"), holds).with("cp", cp).with("rp", sizes[0]));
    }
    entries
}

/// The Glaisher maps are inverse bijections whose step counts match the length
/// change and `G`, and `Σ_{ρ ∈ CP} G(ρ) = c_{r_1,n}`.
pub fn check_prop32(moduli: &ModulusTuple, n: usize) -> Result<CheckEntry> {
    let r1 = moduli.first();
    let rp = enumerate_regular(moduli, n);
    let cp = enumerate_class_regular(moduli, n);
    let mut images = BTreeSet::new();
    let mut holds = rp.len() == cp.len();
    let mut bad: Option<Partition> = None;
    for lambda in &rp {
        let fwd = glaisher_forward(lambda, moduli)?;
        let back = glaisher_inverse(&fwd.output, moduli)?;
        let delta = (fwd.output.length() - lambda.length()) as u64;
        let ok = back.output == *lambda
            && delta == fwd.steps * (r1 - 1)
            && fwd.steps == g_stats(&fwd.output, r1).total
            && back.steps == fwd.steps;
        if !ok && bad.is_none() {
            bad = Some(lambda.clone());
        }
        holds &= ok;
        images.insert(fwd.output);
    }
    holds &= images.len() == cp.len() && images.iter().eq(cp.iter());
    let g_sum: u64 = cp.iter().map(|rho| g_stats(rho, r1).total).sum();
    let c = stat_c(moduli, 1, n)?;
    holds &= g_sum == c;
    let mut e = CheckEntry::new(format!("{moduli} n={n}"), holds).with("g_sum", g_sum).with("c", c);
    if let Some(lambda) = bad {
        e = e.with("lambda", lambda);
    }
    Ok(e)
}

/// `X_{r,j,n} - Y_{r,j,n} = c_{r,n}` by enumeration and by generating functions.
pub fn check_thm41(r: u64, n: usize) -> Result<Vec<CheckEntry>> {
    let moduli = ModulusTuple::single(r)?;
    let c = stat_c(&moduli, 1, n)?;
    let c_series = series_c(&moduli, 1, n)?.counts()?[n];
    let mut entries = Vec::new();
    for j in 1..r {
        let x = stat_x(r, j, n)?;
        let y = stat_y(r, j, n)?;
        let xs = series_x(r, j, n)?.counts()?[n];
        let ys = series_y(r, j, n)?.counts()?[n];
        let holds = x == y + c && xs == x && ys == y && c_series == c;
        entries.push(
            CheckEntry::new(format!("r={r} j={j} n={n}"), holds)
                .with("X", x)
                .with("Y", y)
                .with("c", c),
        );
    }
    Ok(entries)
}

fn zeta_zero(r: u64) -> Result<(u32, CyclotomicNumber)> {
    let o = u32::try_from(r).map_err(|_| Error::ModulusTooSmall(r))?;
    Ok((o, CyclotomicNumber::zero(o)))
}

/// `Q′^{(r)}_λ(x;ζ) = 0` for every partition that is not `r`-regular.
pub fn check_lem44(r: u64, n: usize) -> Result<Vec<CheckEntry>> {
    let (o, _) = zeta_zero(r)?;
    let moduli = ModulusTuple::single(r)?;
    Ok(enumerate_partitions(n)
        .into_iter()
        .filter(|lambda| !is_regular(lambda, &moduli))
        .map(|lambda| {
            let reduced = hl_qprime(&lambda).specialize_t(o).r_reduce(r as usize);
            CheckEntry::new(format!("r={r} {lambda}"), reduced.is_zero())
        })
        .collect())
}

fn one_minus_zeta_product(rho: &Partition, o: u32) -> CyclotomicNumber {
    let one = CyclotomicNumber::one(o);
    rho.parts()
        .iter()
        .fold(one.clone(), |acc, &part| acc * (one.clone() - CyclotomicNumber::zeta_pow(o, part as i64)))
}

/// `Q′^λ_ρ = ∏(1 - ζ^{ρ_i})^{-1} Q^λ_ρ` on `RP × CP`, together with the two
/// orthogonality relations `⟨P_λ, Q_μ⟩_ζ = δ` and `⟨P_λ, Q′^{(r)}_μ⟩_0 = δ`.
pub fn check_prop45(r: u64, n: usize) -> Result<Vec<CheckEntry>> {
    let (o, zero) = zeta_zero(r)?;
    let moduli = ModulusTuple::single(r)?;
    let rp = enumerate_regular(&moduli, n);
    let cp = enumerate_class_regular(&moduli, n);
    let zeta = CyclotomicNumber::zeta(o);
    let ps: Vec<_> = rp.iter().map(|l| hl_p(l).specialize_t(o)).collect();
    let qs: Vec<_> = rp.iter().map(|l| hl_q(l).specialize_t(o)).collect();
    let qps: Vec<_> = rp.iter().map(|l| hl_qprime(l).specialize_t(o).r_reduce(r as usize)).collect();
    let mut entries = Vec::new();
    for (idx, lambda) in rp.iter().enumerate() {
        let mut holds = qs[idx].is_supported_on_class_regular(r as usize);
        for rho in &cp {
            let expected = qs[idx].coeff(rho).checked_div(&one_minus_zeta_product(rho, o))?;
            holds &= qps[idx].coeff(rho) == expected;
        }
        entries.push(CheckEntry::new(format!("r={r} coefficients of {lambda}"), holds));
    }
    let mut at_zeta = true;
    let mut at_zero = true;
    for i in 0..rp.len() {
        for j in 0..rp.len() {
            let delta = if i == j { zero.one_like() } else { zero.clone() };
            at_zeta &= hall_inner(&ps[i], &qs[j], &InnerParam::At(zeta.clone()))? == delta;
            at_zero &= hall_inner(&ps[i], &qps[j], &InnerParam::Zero)? == delta;
        }
    }
    entries.push(CheckEntry::new(format!("r={r} n={n} <P,Q> at t=zeta"), at_zeta));
    entries.push(CheckEntry::new(format!("r={r} n={n} <P,Q'> at t=0"), at_zero));
    Ok(entries)
}

/// `Q′_λ(x;ζ) = (-1)^{i(r-1)} Q′_{λ∖(i^r)}(x;ζ) h_i(x^r)` whenever `m_i(λ) >= r`.
pub fn check_prop43(r: u64, n: usize) -> Result<Vec<CheckEntry>> {
    let (o, zero) = zeta_zero(r)?;
    let ru = r as usize;
    let mut entries = Vec::new();
    for lambda in enumerate_partitions(n) {
        for (i, m) in lambda.multiplicities() {
            if m < ru {
                continue;
            }
            let rest = lambda.remove_parts(i, ru).expect("enough copies");
            let lhs = hl_qprime(&lambda).specialize_t(o);
            let sign = if (i * (ru - 1)).is_multiple_of(2) { 1 } else { -1 };
            let rhs = hl_qprime(&rest)
                .specialize_t(o)
                .product(&complete_h(i, zero.clone()).plethysm_pr(ru))
                .scale(&CyclotomicNumber::from_rational(o, BigRational::from_integer(sign.into())));
            entries.push(CheckEntry::new(format!("r={r} {lambda} i={i}"), lhs == rhs));
        }
    }
    Ok(entries)
}

/// `M(s^{(r)}, Q′^{(r)})` is the `RP × RP` block of `L(ζ)` and lower unitriangular.
pub fn check_prop48(r: u64, n: usize) -> Result<CheckEntry> {
    let m = transition_matrix(Family::Schur, Family::QPrime, r, n)?;
    let l = l_matrix(r, n)?;
    let mut holds = m.matrix.is_lower_unitriangular();
    for (i, lambda) in m.row_index.iter().enumerate() {
        for (j, mu) in m.col_index.iter().enumerate() {
            holds &= l.entry(lambda, mu) == Some(m.matrix.get(i, j));
        }
    }
    Ok(CheckEntry::new(format!("r={r} n={n}"), holds).with("size", m.row_index.len()))
}

/// `⟨P_λ, Q′_μ⟩_0 = δ` in `ℚ[t]` and `⟨P_λ, Q_μ⟩_t = δ` in `ℚ(t)`.
pub fn check_generic_orthogonality(n: usize) -> Result<Vec<CheckEntry>> {
    let parts = enumerate_partitions(n);
    let ps: Vec<SymFunc<Poly>> = parts.iter().map(hl_p).collect();
    let qps: Vec<SymFunc<Poly>> = parts.iter().map(hl_qprime).collect();
    let to_rf = |f: &SymFunc<Poly>| f.map_coeffs(RationalFunction::from_poly(Poly::zero()), |c| RationalFunction::from_poly(c.clone()));
    let ps_rf: Vec<_> = ps.iter().map(to_rf).collect();
    let qs_rf: Vec<_> = parts.iter().map(|l| to_rf(&hl_q(l))).collect();
    let t = RationalFunction::t();
    let mut dual = true;
    let mut orth = true;
    for i in 0..parts.len() {
        for j in 0..parts.len() {
            let delta = if i == j { Poly::one() } else { Poly::zero() };
            dual &= hall_inner(&ps[i], &qps[j], &InnerParam::Zero)? == delta;
            orth &= hall_inner(&ps_rf[i], &qs_rf[j], &InnerParam::At(t.clone()))? == RationalFunction::from_poly(delta);
        }
    }
    Ok(vec![
        CheckEntry::new(format!("n={n} <P,Q'> at t=0 generic"), dual),
        CheckEntry::new(format!("n={n} <P,Q> at generic t"), orth),
    ])
}

/// `|det M(Q′^{(r)}, p^{(r)})| = 1/(r^{c_{r,n}} ∏_{ρ ∈ CP}∏ρ_i)`, with the
/// determinant rational.
pub fn check_thm49(r: u64, n: usize) -> Result<CheckEntry> {
    let moduli = ModulusTuple::single(r)?;
    let c = c_three_ways(&moduli, 1, n)?;
    let m = family_in_p(Family::QPrime, r, n)?;
    let det = m.det()?;
    let a = BigInt::from(part_product_over(&m.col_index));
    let predicted = BigRational::new(BigInt::one(), BigInt::from(r).pow(u32::try_from(c[0]).expect("small c")) * a);
    let rational = det.as_rational();
    let holds = c[0] == c[1] && c[1] == c[2] && rational.as_ref().map(|q| q.abs()) == Some(predicted.clone());
    Ok(CheckEntry::new(format!("r={r} n={n}"), holds)
        .with("det", rational.map_or_else(|| det.to_string(), |q| q.to_string()))
        .with("predicted_magnitude", predicted)
        .with("c", c[0]))
}
