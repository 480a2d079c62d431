//! Aligned text tables.

use bargain_core::monotone::{Correspondence, Outcome};
use bargain_core::CellTable;

/// Pads every column to its widest entry. `cells` is row-major.
pub fn grid(corner: &str, col_heads: &[String], row_heads: &[String], cells: &[String]) -> String {
    let cols = col_heads.len();
    assert_eq!(cells.len(), row_heads.len() * cols);
    let width = |s: &str| s.chars().count();
    let mut widths = Vec::with_capacity(cols + 1);
    widths.push(
        row_heads
            .iter()
            .map(|s| width(s))
            .chain([width(corner)])
            .max()
            .unwrap_or(0),
    );
    for c in 0..cols {
        let w = (0..row_heads.len())
            .map(|r| width(&cells[r * cols + c]))
            .chain([width(&col_heads[c])])
            .max();
        widths.push(w.unwrap_or(0));
    }
    let line = |first: &str, rest: &mut dyn Iterator<Item = &str>| {
        let mut out = format!("{first:<w$}", w = widths[0]);
        for (k, s) in rest.enumerate() {
            out.push_str(" | ");
            out.push_str(&format!("{s:<w$}", w = widths[k + 1]));
        }
        out.truncate(out.trim_end().len());
        out.push('\n');
        out
    };
    let mut out = line(corner, &mut col_heads.iter().map(String::as_str));
    let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
    out.push_str(&rule.join("-+-"));
    out.push('\n');
    for (r, head) in row_heads.iter().enumerate() {
        out.push_str(&line(
            head,
            &mut cells[r * cols..(r + 1) * cols].iter().map(String::as_str),
        ));
    }
    out
}

/// Digits run together while every value is below 10, as in `12`; otherwise
/// they are comma separated.
pub fn compact(values: &[usize]) -> String {
    if values.iter().all(|&v| v < 10) {
        values.iter().map(usize::to_string).collect()
    } else {
        values.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
    }
}

pub fn deal(o: Outcome) -> String {
    compact(&[o.i, o.j])
}

pub fn correspondence(g: &Correspondence) -> String {
    let heads = |maps: &[bargain_core::MonotoneMap]| maps.iter().map(|x| compact(x.values())).collect::<Vec<_>>();
    let cells: Vec<String> = g
        .cells
        .iter()
        .map(|cell| cell.iter().map(|&o| deal(o)).collect::<Vec<_>>().join(" "))
        .collect();
    grid("x\\y", &heads(&g.cols), &heads(&g.rows), &cells)
}

pub fn cell_table(t: &CellTable) -> String {
    let cells: Vec<String> = t
        .cells
        .iter()
        .map(|c| c.iter().map(|v| t.outcomes[v].as_str()).collect::<Vec<_>>().join(" "))
        .collect();
    grid("", &t.col_names, &t.row_names, &cells)
}
