//! Text, JSON and LaTeX renderings of expansions and primary-partition
//! tables.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::binom_poly::BinomPoly;
use crate::partitions::Partition;
use crate::stability::{char_poly, dim_poly, r_primary, stable_limit, CharPolyExpansion, Family};

/// Serde adapter writing `Vec<BigInt>` as a JSON array of plain integers.
pub mod big_seq {
    use std::str::FromStr;

    use num_bigint::BigInt;
    use serde::de::Error as _;
    use serde::ser::SerializeSeq;
    use serde::{Deserialize, Deserializer, Serializer};
    use serde_json::Number;

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for x in v {
            let n = Number::from_str(&x.to_string()).map_err(serde::ser::Error::custom)?;
            seq.serialize_element(&n)?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        let raw = Vec::<Number>::deserialize(d)?;
        raw.iter()
            .map(|n| BigInt::from_str(&n.to_string()).map_err(D::Error::custom))
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Latex,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "json" => Ok(OutputFormat::Json),
            "latex" => Ok(OutputFormat::Latex),
            other => Err(format!(
                "unknown format {other:?} (expected text, json or latex)"
            )),
        }
    }
}

/// `n`, `n-3`, `n+2`.
pub fn shifted_var(var: &str, shift: i64) -> String {
    match shift {
        0 => var.to_string(),
        s if s > 0 => format!("{var}-{s}"),
        s => format!("{var}+{}", -s),
    }
}

/// `n-6,3,3` for `λ = (3,3)`, `n` for `∅`.
fn first_row_shape(lambda: &Partition) -> String {
    let mut s = shifted_var("n", lambda.size() as i64);
    for p in lambda.parts() {
        write!(s, ",{p}").unwrap();
    }
    s
}

fn b_list(b: &[BigInt]) -> String {
    let items: Vec<String> = b.iter().map(ToString::to_string).collect();
    format!("[{}]", items.join(","))
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable")
}

/// Which cycle lengths a displayed row stands for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RowLabel {
    Single(usize),
    /// Consecutive requested `r` values sharing one vector.
    Group(Vec<usize>),
    /// This vector holds for every `r` from the given value on.
    AtLeast(usize),
}

impl RowLabel {
    fn latex(&self) -> String {
        match self {
            RowLabel::Single(2) => r"\tau".to_string(),
            RowLabel::Single(r) => format!(r"\sigma_{{{r}}}"),
            RowLabel::Group(rs) => {
                let list: Vec<String> = rs.iter().map(ToString::to_string).collect();
                format!(r"\sigma_{{r\in\{{{}\}}}}", list.join(","))
            }
            RowLabel::AtLeast(r) => format!(r"\sigma_{{r\geq{r}}}"),
        }
    }

    fn text(&self) -> String {
        match self {
            RowLabel::Single(r) => format!("r={r}"),
            RowLabel::Group(rs) => {
                let list: Vec<String> = rs.iter().map(ToString::to_string).collect();
                format!("r={}", list.join(","))
            }
            RowLabel::AtLeast(r) => format!("r>={r}"),
        }
    }
}

fn chi_text(lambda: &Partition, sigma: &str) -> String {
    format!("chi^({})({sigma})", first_row_shape(lambda))
}

/// `chi^(n-6,3,3)(sigma_3) = 5C(n-3,6) ...` followed by the `b` vector.
pub fn expansion_text(e: &CharPolyExpansion) -> String {
    format!(
        "{} = {}\nb = {}\n",
        chi_text(e.lambda(), &format!("sigma_{}", e.r())),
        e.poly(),
        b_list(e.b())
    )
}

pub fn expansion_json(e: &CharPolyExpansion) -> String {
    to_json(e) + "\n"
}

/// One `alignat*` row: `label & =c\binom{..}{..} & ±c\binom{..}{..} ...`.
///
/// Cells run from degree `k` down to 0; zero coefficients leave the cell
/// empty.
fn latex_row(label: &str, poly: &BinomPoly, k: usize) -> String {
    let var = shifted_var("n", poly.shift());
    let mut row = label.to_string();
    let mut first = true;
    for m in (0..=k).rev() {
        let c = poly.coeff(m);
        row.push_str(" &");
        if c.is_zero() {
            continue;
        }
        let sign = if first {
            "=".to_string()
        } else if c.is_negative() {
            "-".to_string()
        } else {
            "+".to_string()
        };
        let mag = if first {
            c.to_string()
        } else {
            c.abs().to_string()
        };
        write!(row, r" {sign}{mag}\binom{{{var}}}{{{m}}}").unwrap();
        first = false;
    }
    if first {
        row.push_str(" =0");
    }
    row
}

fn alignat(rows: &[String], k: usize) -> String {
    let mut out = format!("\\begin{{alignat*}}{{{}}}\n", k + 1);
    for (i, row) in rows.iter().enumerate() {
        out.push_str(row);
        if i + 1 < rows.len() {
            out.push_str(r" \\");
        }
        out.push('\n');
    }
    out.push_str("\\end{alignat*}\n");
    out
}

fn chi_latex(lambda: &Partition, label: &RowLabel) -> String {
    format!(r"\chi^{{({})}}({})", first_row_shape(lambda), label.latex())
}

pub fn expansion_latex(e: &CharPolyExpansion) -> String {
    let label = chi_latex(e.lambda(), &RowLabel::Single(e.r()));
    alignat(&[latex_row(&label, &e.poly(), e.k())], e.k())
}

pub fn render_expansion(e: &CharPolyExpansion, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => expansion_text(e),
        OutputFormat::Json => expansion_json(e),
        OutputFormat::Latex => expansion_latex(e),
    }
}

/// Expansions of one `λ` over several cycle lengths, plus the dimension.
#[derive(Debug, Clone)]
pub struct ExpansionTable {
    pub lambda: Partition,
    pub rows: Vec<CharPolyExpansion>,
    pub dim: BinomPoly,
    /// Smallest requested `r` from which the vector equals `a_{λ,·}` for all
    /// larger `r`, if any.
    pub stable_from: Option<usize>,
}

impl ExpansionTable {
    /// `r_list` is sorted and deduplicated. Every entry must be positive.
    pub fn build(lambda: &Partition, r_list: &[usize]) -> Self {
        let mut rs = r_list.to_vec();
        rs.sort_unstable();
        rs.dedup();
        let rows: Vec<CharPolyExpansion> = rs.iter().map(|&r| char_poly(lambda, r)).collect();
        let limit = stable_limit(lambda);
        // b^{(r)} = a_{λ,·} for every r > k, so checking up to k+1 suffices.
        let stable_at = |r: usize| {
            (r..=lambda.size() + 1).all(|s| char_poly(lambda, s).b() == limit.as_slice())
        };
        let mut stable_from = None;
        for e in rows.iter().rev() {
            if e.b() == limit.as_slice() && stable_at(e.r()) {
                stable_from = Some(e.r());
            } else {
                break;
            }
        }
        ExpansionTable {
            lambda: lambda.clone(),
            rows,
            dim: dim_poly(lambda),
            stable_from,
        }
    }

    /// Rows merged by identical `b` vectors, consecutive in `r`. Rows from
    /// `stable_from` on collapse into a single `r >= ...` row.
    pub fn grouped(&self) -> Vec<(RowLabel, &CharPolyExpansion)> {
        let mut groups: Vec<(RowLabel, &CharPolyExpansion)> = Vec::new();
        let mut pending: Vec<(Vec<usize>, &CharPolyExpansion)> = Vec::new();
        for e in &self.rows {
            if self.stable_from.is_some_and(|s| e.r() >= s) {
                break;
            }
            match pending.last_mut() {
                Some((rs, prev)) if prev.b() == e.b() => rs.push(e.r()),
                _ => pending.push((vec![e.r()], e)),
            }
        }
        for (rs, e) in pending {
            let label = if rs.len() == 1 {
                RowLabel::Single(rs[0])
            } else {
                RowLabel::Group(rs)
            };
            groups.push((label, e));
        }
        if let Some(s) = self.stable_from {
            let e = self.rows.iter().find(|e| e.r() == s).expect("stable row");
            groups.push((RowLabel::AtLeast(s), e));
        }
        groups
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Text => self.text(),
            OutputFormat::Json => self.json(),
            OutputFormat::Latex => self.latex(),
        }
    }

    fn text(&self) -> String {
        let mut out = format!("lambda = {}, k = {}\n", self.lambda, self.lambda.size());
        for (label, e) in self.grouped() {
            writeln!(
                out,
                "{:<8}b = {:<20} {} = {}",
                label.text(),
                b_list(e.b()),
                chi_text(&self.lambda, &format!("sigma_{}", e.r())),
                e.poly()
            )
            .unwrap();
        }
        writeln!(
            out,
            "{:<8}a = {:<20} f^({}) = {}",
            "dim",
            b_list(&stable_limit(&self.lambda)),
            first_row_shape(&self.lambda),
            self.dim
        )
        .unwrap();
        out
    }

    fn json(&self) -> String {
        #[derive(Serialize)]
        struct Doc<'a> {
            lambda: &'a Partition,
            k: usize,
            rows: &'a [CharPolyExpansion],
            stable_from: Option<usize>,
            dim: &'a BinomPoly,
        }
        to_json(&Doc {
            lambda: &self.lambda,
            k: self.lambda.size(),
            rows: &self.rows,
            stable_from: self.stable_from,
            dim: &self.dim,
        }) + "\n"
    }

    fn latex(&self) -> String {
        let k = self.lambda.size();
        let mut rows: Vec<String> = self
            .grouped()
            .into_iter()
            .map(|(label, e)| latex_row(&chi_latex(&self.lambda, &label), &e.poly(), k))
            .collect();
        let dim_label = format!("f^{{({})}}", first_row_shape(&self.lambda));
        rows.push(latex_row(&dim_label, &self.dim, k));
        alignat(&rows, k)
    }
}

/// `Γ^r_h` for `0 <= h <= max_h`.
pub fn primaries_table(r: usize, max_h: usize, format: OutputFormat) -> String {
    let rows: Vec<(usize, crate::stability::SignedPartition)> = (0..=max_h)
        .flat_map(|h| r_primary(r, h).into_iter().map(move |s| (h, s)))
        .collect();
    let sign = |s: i32| if s > 0 { "+" } else { "-" };
    match format {
        OutputFormat::Text => {
            let mut out = format!("{:<4}{:<16}{:<6}{}\n", "h", "partition", "sign", "family");
            for (h, s) in &rows {
                writeln!(
                    out,
                    "{:<4}{:<16}{:<6}{}",
                    h,
                    s.partition.to_string(),
                    sign(s.sign),
                    s.family
                )
                .unwrap();
            }
            out
        }
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct Row<'a> {
                h: usize,
                partition: &'a Partition,
                sign: i32,
                family: Family,
            }
            #[derive(Serialize)]
            struct Doc<'a> {
                r: usize,
                max_h: usize,
                rows: Vec<Row<'a>>,
            }
            let doc = Doc {
                r,
                max_h,
                rows: rows
                    .iter()
                    .map(|(h, s)| Row {
                        h: *h,
                        partition: &s.partition,
                        sign: s.sign,
                        family: s.family,
                    })
                    .collect(),
            };
            to_json(&doc) + "\n"
        }
        OutputFormat::Latex => {
            let mut out = String::from("\\begin{tabular}{|c|c|c|c|}\n\\hline\n");
            writeln!(
                out,
                r"$h$ & $\nu$ & $\varepsilon^{{{r}}}_{{\nu}}$ & family \\ \hline"
            )
            .unwrap();
            for (h, s) in &rows {
                let nu = if s.partition.is_empty() {
                    r"\emptyset".to_string()
                } else {
                    s.partition.to_string()
                };
                let sg = if s.sign > 0 { "+" } else { "-" };
                writeln!(out, r"{h} & ${nu}$ & ${sg}$ & {} \\ \hline", s.family).unwrap();
            }
            out.push_str("\\end{tabular}\n");
            out
        }
    }
}
