//! Text renderings in union notation, `A₁ ∪ A₂`.

use linbialg::io::ScalarCodec;
use linbialg::scalar::{Polynomial, Rational, Rationals};
use linbialg::{Bimatrix, Matrix};

fn width(s: &str) -> usize {
    s.chars().count()
}

/// Bracketed rows with right-aligned columns.
pub fn matrix_lines<C: ScalarCodec>(c: &C, m: &Matrix<C::Elem>) -> Vec<String> {
    if m.rows() == 0 || m.cols() == 0 {
        return vec![format!("[ ] ({}x{})", m.rows(), m.cols())];
    }
    let cells: Vec<Vec<String>> = (0..m.rows())
        .map(|i| m.row(i).iter().map(|x| c.render_literal(x)).collect())
        .collect();
    let widths: Vec<usize> = (0..m.cols())
        .map(|j| cells.iter().map(|r| width(&r[j])).max().unwrap_or(0))
        .collect();
    cells
        .iter()
        .map(|r| {
            let padded: Vec<String> = r
                .iter()
                .zip(&widths)
                .map(|(s, &w)| format!("{}{s}", " ".repeat(w - width(s))))
                .collect();
            format!("[ {} ]", padded.join("  "))
        })
        .collect()
}

/// Two blocks side by side with `∪` on the middle row of the taller one.
pub fn union(left: &[String], right: &[String]) -> String {
    let rows = left.len().max(right.len()).max(1);
    let lw = left.iter().map(|s| width(s)).max().unwrap_or(0);
    let mid = (rows - 1) / 2;
    let mut out = Vec::with_capacity(rows);
    for i in 0..rows {
        let l = left.get(i).map(String::as_str).unwrap_or("");
        let r = right.get(i).map(String::as_str).unwrap_or("");
        let sep = if i == mid { " ∪ " } else { "   " };
        let line = format!("{l}{}{sep}{r}", " ".repeat(lw - width(l)));
        out.push(line.trim_end().to_string());
    }
    out.join("\n")
}

pub fn bimatrix<C: ScalarCodec>(c: &C, m: &Bimatrix<C::Elem>) -> String {
    union(&matrix_lines(c, &m.first), &matrix_lines(c, &m.second))
}

pub fn matrix<C: ScalarCodec>(c: &C, m: &Matrix<C::Elem>) -> String {
    matrix_lines(c, m).join("\n")
}

pub fn vector<C: ScalarCodec>(c: &C, v: &[C::Elem]) -> String {
    let parts: Vec<String> = v.iter().map(|x| c.render_literal(x)).collect();
    format!("({})", parts.join(", "))
}

pub fn list<C: ScalarCodec>(c: &C, vs: &[Vec<C::Elem>]) -> String {
    if vs.is_empty() {
        return "{}".into();
    }
    let parts: Vec<String> = vs.iter().map(|v| vector(c, v)).collect();
    format!("{{{}}}", parts.join(", "))
}

/// A coefficient vector read as a polynomial in `x`.
pub fn as_poly(v: &[Rational]) -> String {
    Polynomial::new(&Rationals, v.to_vec()).render(&Rationals, "x")
}

pub fn literals<C: ScalarCodec>(c: &C, v: &[C::Elem]) -> Vec<String> {
    v.iter().map(|x| c.render_literal(x)).collect()
}
