//! Number formatting and the simulation CSV layout.

use std::io::Write;

use crate::error::CliError;
use crate::harness::SimRow;

pub const CSV_HEADER: [&str; 7] = ["model", "n", "s", "metric", "alpha", "value", "mc_se"];

/// `%g`-style rendering with 6 significant digits.
pub fn sig6(x: f64) -> String {
    if !x.is_finite() {
        return format!("{x}");
    }
    if x == 0.0 {
        return "0".into();
    }
    let exp = x.abs().log10().floor() as i32;
    // Rounding can bump the exponent (e.g. 999999.7 -> 1e+06).
    let rounded: f64 = format!("{x:.5e}").parse().unwrap();
    let exp = if rounded.abs() >= 10f64.powi(exp + 1) {
        exp + 1
    } else {
        exp
    };
    if (-5..6).contains(&exp) {
        let decimals = (5 - exp).max(0) as usize;
        trim_zeros(format!("{x:.decimals$}"))
    } else {
        let s = format!("{x:.5e}");
        let (mantissa, e) = s.split_once('e').unwrap();
        let e: i32 = e.parse().unwrap();
        format!(
            "{}e{}{:02}",
            trim_zeros(mantissa.into()),
            if e < 0 { '-' } else { '+' },
            e.abs()
        )
    }
}

fn trim_zeros(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

/// Writes rows in the fixed column order; floats use shortest round-trip form.
pub fn write_csv<W: Write>(out: W, rows: &[SimRow]) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in rows {
        w.write_record([
            r.model.clone(),
            r.n.to_string(),
            r.s.to_string(),
            r.metric.name().to_string(),
            r.alpha.map(|a| a.to_string()).unwrap_or_default(),
            r.value.to_string(),
            r.mc_se.to_string(),
        ])?;
    }
    w.flush().map_err(|e| CliError::Csv(e.into()))?;
    Ok(())
}

/// Parses CSV produced by [`write_csv`].
pub fn read_csv(text: &str) -> Result<Vec<SimRow>, CliError> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let bad = |what: &str| CliError::Usage(format!("csv: bad {what}"));
    let mut rows = Vec::new();
    for rec in r.records() {
        let rec = rec?;
        let field = |i: usize| rec.get(i).ok_or_else(|| bad("row length"));
        rows.push(SimRow {
            model: field(0)?.to_string(),
            n: field(1)?.parse().map_err(|_| bad("n"))?,
            s: field(2)?.parse().map_err(|_| bad("s"))?,
            metric: field(3)?.parse()?,
            alpha: match field(4)? {
                "" => None,
                a => Some(a.parse().map_err(|_| bad("alpha"))?),
            },
            value: field(5)?.parse().map_err(|_| bad("value"))?,
            mc_se: field(6)?.parse().map_err(|_| bad("mc_se"))?,
        });
    }
    Ok(rows)
}
