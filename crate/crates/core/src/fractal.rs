//! Iterated-transduction bitmaps: row `k` is `T^k` applied to the first
//! `cols` terms of the sequence.

use crate::automaton::Dfao;
use crate::error::{Error, Result};
use crate::transducer::Transducer;
use crate::Symbol;

/// Largest accepted `rows × cols`.
pub const MAX_PIXELS: usize = 1 << 24;

pub fn fractal_rows(
    m: &Dfao,
    t: &Transducer,
    rows: usize,
    cols: usize,
) -> Result<Vec<Vec<Symbol>>> {
    if rows.saturating_mul(cols) > MAX_PIXELS {
        return Err(Error::SizeLimit(format!("{rows} x {cols} bitmap")));
    }
    let mut row = m.sequence_prefix(cols)?;
    let mut out = Vec::with_capacity(rows);
    for k in 0..rows {
        if row.iter().any(|&b| b > 1) {
            return Err(Error::Invalid(format!("row {k} is not binary")));
        }
        let next = if k + 1 < rows {
            Some(t.transduce(&row)?)
        } else {
            None
        };
        out.push(row);
        match next {
            Some(n) => row = n,
            None => break,
        }
    }
    Ok(out)
}

/// Plain PBM (`P1`), 1 = black, at most 70 characters per line.
pub fn to_pbm(rows: &[Vec<Symbol>]) -> String {
    let cols = rows.first().map_or(0, Vec::len);
    let mut s = format!("P1\n{cols} {}\n", rows.len());
    for row in rows {
        for chunk in row.chunks(70) {
            s.extend(chunk.iter().map(|&b| if b == 1 { '1' } else { '0' }));
            s.push('\n');
        }
    }
    s
}

pub fn render_fractal(m: &Dfao, t: &Transducer, rows: usize, cols: usize) -> Result<String> {
    Ok(to_pbm(&fractal_rows(m, t, rows, cols)?))
}
