//! Subcommand implementations. Each returns rendered output or a usage error.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use regpart_core::chartable::{character_table, part_product_over, regular_character_table, CharacterTable};
use regpart_core::glaisher::{g_stats, glaisher_forward, glaisher_inverse};
use regpart_core::partition::{
    enumerate_class_regular, enumerate_regular, ModulusTuple, Partition,
};
use regpart_core::poly::Poly;
use regpart_core::series::{phi, series_c, series_rp, series_v, series_w};
use regpart_core::stats::{stat_a, stat_b, stat_c, v_table, w_table, x_table, y_table, StatisticTable};
use regpart_core::symfunc::hall_littlewood::{hl_p, hl_q, hl_qprime};
use regpart_core::symfunc::{kostka_table, SymFunc};
use regpart_core::verify::{run_suite, Suite, VerifyConfig};

use crate::output::{csv_table, Meta, Rendered};
use crate::{Common, EnumFamily, GlaisherKind, HlKind, Outcome, SeriesKind, StatKind, TableKind};

type CmdResult = Result<Outcome, String>;

pub fn parse_moduli(s: &str) -> Result<ModulusTuple, String> {
    let moduli = s
        .split(',')
        .map(|x| x.trim().parse::<u64>().map_err(|e| format!("bad modulus `{x}`: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    ModulusTuple::new(moduli).map_err(|e| e.to_string())
}

pub fn parse_partition(s: &str) -> Result<Partition, String> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    if s.is_empty() {
        return Ok(Partition::empty());
    }
    let parts = s
        .split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|e| format!("bad part `{x}`: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    Partition::new(parts).map_err(|e| e.to_string())
}

fn meta(command: &str, common: &Common) -> Meta {
    let mut params = common.params();
    if !command.starts_with("series") {
        params.remove("degree");
    }
    Meta { command: command.to_string(), params }
}

fn need<T: Clone>(value: &Option<T>, flag: &str) -> Result<T, String> {
    value.clone().ok_or_else(|| format!("missing --{flag}"))
}

fn need_n(common: &Common, limit: usize) -> Result<usize, String> {
    let n = need(&common.n, "n")?;
    if n > limit {
        return Err(format!("n = {n} exceeds the limit {limit}; raise it with --limit-n or --limit-table-n"));
    }
    Ok(n)
}

fn need_moduli(common: &Common) -> Result<ModulusTuple, String> {
    need(&common.moduli, "moduli")
}

/// `--r`, or a one-element `--moduli`.
fn need_r(common: &Common) -> Result<u64, String> {
    if let Some(r) = common.r {
        if r < 2 {
            return Err(format!("r = {r} must be at least 2"));
        }
        return Ok(r);
    }
    match &common.moduli {
        Some(m) if m.len() == 1 => Ok(m.first()),
        _ => Err("missing --r".into()),
    }
}

fn need_degree(common: &Common) -> Result<usize, String> {
    if common.degree > common.limit_degree {
        return Err(format!("degree {} exceeds the limit {}", common.degree, common.limit_degree));
    }
    Ok(common.degree)
}

fn err(e: regpart_core::Error) -> String {
    e.to_string()
}

fn lines<T: std::fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    let mut s = String::new();
    for item in items {
        let _ = writeln!(s, "{item}");
    }
    s
}

pub fn enumerate(family: EnumFamily, common: &Common) -> CmdResult {
    let moduli = need_moduli(common)?;
    let n = need_n(common, common.limit_n)?;
    let (name, list) = match family {
        EnumFamily::Cp => ("enumerate cp", enumerate_class_regular(&moduli, n)),
        EnumFamily::Rp => ("enumerate rp", enumerate_regular(&moduli, n)),
    };
    let text = lines(&list);
    Ok(Outcome::Ok(Rendered::new(meta(name, common), &list, text)))
}

fn table_output(name: &str, common: &Common, table: StatisticTable) -> Rendered {
    let text = lines(table.values.iter().map(|(j, v)| format!("{j} {v}")));
    let csv = csv_table(("j", "value"), table.values.iter().map(|(j, v)| (*j, *v)));
    Rendered::new(meta(name, common), &table, text).with_csv(csv)
}

fn single_value<T: Serialize + ToString>(name: &str, common: &Common, value: T) -> Rendered {
    let text = format!("{}\n", value.to_string());
    let csv = format!("value\n{}\n", value.to_string());
    Rendered::new(meta(name, common), &value, text).with_csv(csv)
}

pub fn stats(stat: StatKind, common: &Common) -> CmdResult {
    let n = need_n(common, common.limit_n)?;
    let rendered = match stat {
        StatKind::V | StatKind::W => {
            let moduli = need_moduli(common)?;
            let name = if matches!(stat, StatKind::V) { "stats V" } else { "stats W" };
            let table = if matches!(stat, StatKind::V) { v_table(&moduli, n) } else { w_table(&moduli, n) };
            match common.j {
                Some(0) => return Err("j must be positive".into()),
                Some(j) => single_value(name, common, table.values.get(&j).copied().unwrap_or(0)),
                None => table_output(name, common, table),
            }
        }
        StatKind::X | StatKind::Y => {
            let r = need_r(common)?;
            let name = if matches!(stat, StatKind::X) { "stats X" } else { "stats Y" };
            let table = if matches!(stat, StatKind::X) { x_table(r, n) } else { y_table(r, n) }.map_err(err)?;
            match common.j {
                Some(j) => {
                    let v = table.values.get(&j).copied().ok_or_else(|| format!("j must lie in 1..={}", r - 1))?;
                    single_value(name, common, v)
                }
                None => table_output(name, common, table),
            }
        }
        StatKind::A => single_value("stats a", common, stat_a(&need_moduli(common)?, n).to_string()),
        StatKind::B => single_value("stats b", common, stat_b(&need_moduli(common)?, n).to_string()),
        StatKind::C => {
            let moduli = match (&common.moduli, common.r) {
                (Some(m), _) => m.clone(),
                (None, Some(r)) => ModulusTuple::single(r).map_err(err)?,
                (None, None) => return Err("missing --moduli or --r".into()),
            };
            let i = common.i.unwrap_or(1);
            single_value("stats c", common, stat_c(&moduli, i, n).map_err(err)?)
        }
    };
    Ok(Outcome::Ok(rendered))
}

pub fn series(kind: SeriesKind, common: &Common) -> CmdResult {
    let moduli = need_moduli(common)?;
    let degree = need_degree(common)?;
    let (name, s) = match kind {
        SeriesKind::Phi => ("series phi", phi(&moduli, degree)),
        SeriesKind::V => ("series v", series_v(&moduli, need(&common.j, "j")?, degree).map_err(err)?),
        SeriesKind::W => ("series w", series_w(&moduli, need(&common.j, "j")?, degree).map_err(err)?),
        SeriesKind::C => ("series c", series_c(&moduli, common.i.unwrap_or(1), degree).map_err(err)?),
        SeriesKind::Rp => ("series rp", series_rp(&moduli, degree)),
    };
    let counts = s.counts().map_err(err)?;
    let text = format!("{s}\n");
    let csv = csv_table(("k", "coefficient"), counts.iter().enumerate());
    Ok(Outcome::Ok(Rendered::new(meta(name, common), &counts, text).with_csv(csv)))
}

pub fn glaisher(direction: GlaisherKind, common: &Common) -> CmdResult {
    let moduli = need_moduli(common)?;
    let lambda = need(&common.partition, "partition")?;
    if lambda.weight() > common.limit_n {
        return Err(format!("weight {} exceeds the limit {}", lambda.weight(), common.limit_n));
    }
    let rendered = match direction {
        GlaisherKind::Forward | GlaisherKind::Inverse => {
            let (name, trace) = if matches!(direction, GlaisherKind::Forward) {
                ("glaisher forward", glaisher_forward(&lambda, &moduli))
            } else {
                ("glaisher inverse", glaisher_inverse(&lambda, &moduli))
            };
            let trace = trace.map_err(err)?;
            let text = format!("{} -> {} (steps {})\n", trace.input, trace.output, trace.steps);
            Rendered::new(meta(name, common), &trace, text)
        }
        GlaisherKind::Gstats => {
            let stats = g_stats(&lambda, moduli.first());
            let mut text = lines(stats.by_j.iter().map(|(j, g)| format!("G_{j} = {g}")));
            let _ = writeln!(text, "G = {}", stats.total);
            Rendered::new(meta("glaisher gstats", common), &stats, text)
        }
    };
    Ok(Outcome::Ok(rendered))
}

/// `K(t)` on the partitions of `n`, rows `λ`, columns `μ`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct KostkaReport {
    pub partitions: Vec<Partition>,
    pub entries: Vec<Vec<Poly>>,
}

pub fn kostka(common: &Common) -> CmdResult {
    let n = need_n(common, common.limit_table_n)?;
    let table = kostka_table(n);
    let report = KostkaReport { partitions: table.partitions.clone(), entries: table.k.to_rows() };
    let mut text = String::new();
    for (i, lambda) in report.partitions.iter().enumerate() {
        for (j, mu) in report.partitions.iter().enumerate() {
            if !report.entries[i][j].is_zero() {
                let _ = writeln!(text, "K_{lambda},{mu} = {}", report.entries[i][j]);
            }
        }
    }
    Ok(Outcome::Ok(Rendered::new(meta("kostka", common), &report, text)))
}

pub fn hl(kind: HlKind, common: &Common) -> CmdResult {
    let lambda = need(&common.partition, "partition")?;
    if lambda.weight() > common.limit_table_n {
        return Err(format!("weight {} exceeds the limit {}", lambda.weight(), common.limit_table_n));
    }
    let (name, f): (&str, SymFunc<Poly>) = match kind {
        HlKind::P => ("hl p", hl_p(&lambda)),
        HlKind::Q => ("hl q", hl_q(&lambda)),
        HlKind::Qprime => ("hl qprime", hl_qprime(&lambda)),
    };
    let rendered = match common.r {
        None if common.reduced => return Err("--reduced needs --r".into()),
        None => Rendered::new(meta(name, common), &f, format!("{f}\n")),
        Some(r) => {
            let order = u32::try_from(r).ok().filter(|&o| o >= 2).ok_or_else(|| format!("bad r = {r}"))?;
            let mut g = f.specialize_t(order);
            if common.reduced {
                g = g.r_reduce(r as usize);
            }
            Rendered::new(meta(name, common), &g, format!("{g}\n"))
        }
    };
    Ok(Outcome::Ok(rendered))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableReport {
    pub table: CharacterTable,
    pub det: String,
    /// `∏_ρ ∏_i ρ_i` over the column partitions.
    pub column_part_product: String,
}

pub fn chartable(kind: TableKind, common: &Common) -> CmdResult {
    let n = need_n(common, common.limit_table_n)?;
    let (name, table) = match kind {
        TableKind::Full => ("chartable full", (*character_table(n)).clone()),
        TableKind::Regular => ("chartable regular", regular_character_table(need_r(common)?, n).map_err(err)?),
    };
    let det = table.det().map_err(err)?;
    let product = part_product_over(&table.cols);
    let mut text = String::new();
    let _ = writeln!(
        text,
        "{:>12} {}",
        "",
        table.cols.iter().map(|c| format!("{:>8}", c.to_compact())).collect::<String>()
    );
    for (i, row) in table.rows.iter().enumerate() {
        let cells: String = table.entries[i].iter().map(|v| format!("{v:>8}")).collect();
        let _ = writeln!(text, "{:>12} {cells}", row.to_compact());
    }
    let _ = writeln!(text, "det = {det}");
    let report = TableReport { table, det: det.to_string(), column_part_product: product.to_string() };
    Ok(Outcome::Ok(Rendered::new(meta(name, common), &report, text)))
}

pub fn verify(suite: &str, common: &Common) -> CmdResult {
    let suite: Suite = suite.parse()?;
    let mut config = VerifyConfig::default_for(suite);
    if suite.uses_tuples() {
        match (&common.moduli, common.r) {
            (Some(m), _) => config.moduli = vec![m.clone()],
            (None, Some(r)) => config.moduli = vec![ModulusTuple::single(r).map_err(err)?],
            (None, None) => {}
        }
    } else if common.moduli.is_some() || common.r.is_some() {
        config.rs = vec![need_r(common)?];
    }
    if let Some(n) = common.n {
        config.min_n = n;
        config.max_n = n;
    }
    if let Some(max_n) = common.max_n {
        config.max_n = max_n;
    }
    if config.min_n > config.max_n {
        return Err(format!("empty range {}..={}", config.min_n, config.max_n));
    }
    let limit = match suite {
        Suite::Thm21 | Suite::Thm22 | Suite::Thm23 | Suite::Thm41 | Suite::Prop31 | Suite::Prop32 => common.limit_n,
        _ => common.limit_table_n,
    };
    if config.max_n > limit {
        return Err(format!("n = {} exceeds the limit {limit} for {suite}", config.max_n));
    }
    let report = run_suite(suite, &config).map_err(err)?;
    let mut text = String::new();
    for e in &report.entries {
        let values: Vec<String> = e.values.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let _ = writeln!(text, "{} {} {}", if e.holds { "ok  " } else { "FAIL" }, e.label, values.join(" "));
    }
    let _ = writeln!(text, "{suite}: {} checks, {} failures", report.checks, report.failures);
    let rendered = Rendered::new(meta(&format!("verify {suite}"), common), &report, text);
    Ok(if report.passed { Outcome::Ok(rendered) } else { Outcome::VerificationFailed(rendered) })
}
