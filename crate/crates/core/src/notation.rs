//! Textual forms of lattice subsets.
//!
//! * grid: `"r3/r2/r1/r0"`, top row `β = 3` first, each row four characters
//!   from `{X, .}` for columns `α = 0..3` (the orientation of the figures);
//! * pair list: `"α,β;α,β;..."`;
//! * hex mask: `"0xNNNN"` with site `(α, β)` at bit `4α + β`.

use crate::error::{Error, Result};
use crate::lattice::LatticeSubset;
use crate::pauli::PauliPair;

fn parse_err(position: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        position,
        message: message.into(),
    }
}

pub fn parse_subset(text: &str) -> Result<LatticeSubset> {
    let lead = text.len() - text.trim_start().len();
    let t = text.trim();
    if t.is_empty() {
        return Err(parse_err(0, "empty subset text"));
    }
    if let Some(hex) = t.strip_prefix("0x").or_else(|| t.strip_prefix("0X")) {
        return parse_hex(hex, lead + 2);
    }
    if t.contains('/') {
        return parse_grid(t, lead);
    }
    parse_pairs(t, lead)
}

fn parse_hex(hex: &str, offset: usize) -> Result<LatticeSubset> {
    if hex.is_empty() || hex.len() > 4 {
        return Err(parse_err(offset, "hex mask needs 1 to 4 digits"));
    }
    if let Some(i) = hex.find(|c: char| !c.is_ascii_hexdigit()) {
        return Err(parse_err(offset + i, "invalid hex digit"));
    }
    Ok(LatticeSubset(
        u16::from_str_radix(hex, 16).expect("validated hex"),
    ))
}

fn parse_grid(text: &str, offset: usize) -> Result<LatticeSubset> {
    let rows: Vec<&str> = text.split('/').collect();
    if rows.len() != 4 {
        return Err(parse_err(
            offset,
            format!("grid needs 4 rows, found {}", rows.len()),
        ));
    }
    let mut mask = 0u16;
    let mut pos = offset;
    for (k, row) in rows.iter().enumerate() {
        let beta = 3 - k;
        if row.chars().count() != 4 {
            return Err(parse_err(pos, format!("row {beta} needs 4 cells")));
        }
        for (alpha, ch) in row.chars().enumerate() {
            match ch {
                'X' | 'x' => mask |= 1 << (4 * alpha + beta),
                '.' => {}
                _ => return Err(parse_err(pos + alpha, format!("unexpected '{ch}' in grid"))),
            }
        }
        pos += row.len() + 1;
    }
    Ok(LatticeSubset(mask))
}

fn parse_pairs(text: &str, offset: usize) -> Result<LatticeSubset> {
    let mut subset = LatticeSubset::EMPTY;
    let mut pos = offset;
    for item in text.split(';') {
        let trimmed = item.trim();
        let at = pos + (item.len() - item.trim_start().len());
        // tolerate a trailing separator
        if trimmed.is_empty() && pos + item.len() == offset + text.len() && pos != offset {
            break;
        }
        let (a, b) = trimmed
            .split_once(',')
            .ok_or_else(|| parse_err(at, "expected 'α,β'"))?;
        let label = |s: &str, p: usize| -> Result<u8> {
            let v: i64 = s
                .trim()
                .parse()
                .map_err(|_| parse_err(p, format!("'{}' is not an integer", s.trim())))?;
            if (0..4).contains(&v) {
                Ok(v as u8)
            } else {
                Err(parse_err(p, format!("label {v} outside 0..=3")))
            }
        };
        let alpha = label(a, at)?;
        let beta = label(b, at + a.len() + 1)?;
        let site = PauliPair::new(alpha, beta)?;
        if subset.contains(site) {
            return Err(parse_err(at, format!("duplicate site {site}")));
        }
        subset = subset.with(site);
        pos += item.len() + 1;
    }
    Ok(subset)
}

/// Compact grid form, parseable by [`parse_subset`].
pub fn render_grid(subset: LatticeSubset) -> String {
    (0..4)
        .rev()
        .map(|beta| {
            (0..4)
                .map(|alpha| {
                    if subset.0 >> (4 * alpha + beta) & 1 == 1 {
                        'X'
                    } else {
                        '.'
                    }
                })
                .collect::<String>()
        })
        .collect::<Vec<_>>()
        .join("/")
}

pub fn render_pairs(subset: LatticeSubset) -> String {
    subset
        .sites()
        .map(|s| format!("{},{}", s.col, s.row))
        .collect::<Vec<_>>()
        .join(";")
}

/// Multi-line table with rows labelled 3..0 top to bottom and columns 0..3.
pub fn render_table(subset: LatticeSubset) -> String {
    let mut out = String::new();
    for beta in (0..4).rev() {
        out.push_str(&format!("{beta} |"));
        for alpha in 0..4 {
            let mark = if subset.0 >> (4 * alpha + beta) & 1 == 1 {
                'X'
            } else {
                '.'
            };
            out.push(' ');
            out.push(mark);
        }
        out.push('\n');
    }
    out.push_str("    0 1 2 3\n");
    out
}
