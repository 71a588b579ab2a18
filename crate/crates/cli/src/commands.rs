use serde::Serialize;
use stablerep::plethysm::{
    decompose_twisted, is_projective_theorem, is_projective_twisted_theorem, is_stably_irreducible_pl_small,
    is_stably_irreducible_theorem, is_stably_irreducible_twisted_theorem, multiset_criterion, PlethysmResult,
    Verdict,
};
use stablerep::stable::{height_position_tables, HeightTable};
use stablerep::{Basis, OddPrime, Partition, StableElement};
use stablerep_oracle::{decompose_kn, green_module, green_transport, schur_apply_limited, KNDecompositionJson};

use crate::{check_degree, Format, Output, UsageError};

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleReport {
    /// The `kN`-decomposition of the constructed module.
    pub kn: KNDecompositionJson,
    pub decomposition: StableElement,
    pub display: String,
    pub agree: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct DecomposeReport {
    pub result: PlethysmResult,
    pub display: String,
    pub oracle: Option<OracleReport>,
}

impl DecomposeReport {
    fn render(&self) -> String {
        let r = &self.result;
        let input = Basis { l: r.l, m: r.twist_m }.label();
        let mut out = format!("∇^{}({input}) at p = {}\n", r.nu, r.p);
        out.push_str(&format!("decomposition: {}\n", self.display));
        out.push_str(&format!("projective: {}\n", yes_no(r.projective)));
        out.push_str(&format!("stably irreducible: {}\n", yes_no(r.stably_irreducible)));
        if let Some(w) = r.witness {
            out.push_str(&format!("summand: {}\n", w.label()));
        }
        out.push_str(&format!("case: {}\n", r.theorem_case));
        if let Some(o) = &self.oracle {
            out.push_str(&format!("oracle: {}\n", o.display));
            let kn: Vec<String> = o
                .kn
                .summands
                .iter()
                .map(|s| format!("{}·U_{{{},{}}}", s.mult, s.i, s.j))
                .collect();
            out.push_str(&format!("kN summands: {}\n", if kn.is_empty() { "none".into() } else { kn.join(" ⊕ ") }));
            out.push_str(if o.agree { "AGREE\n" } else { "DISAGREE\n" });
        }
        out
    }
}

/// `∇^ν(Ω^m Sym^l E)` by `Θ`, and by the matrix oracle if `max_dim` is given.
pub fn decompose(
    p: OddPrime,
    nu: &Partition,
    l: usize,
    omega: i64,
    max_dim: Option<u64>,
    format: Format,
) -> Result<Output, UsageError> {
    check_degree(p, l)?;
    nu.require_p_small(p)?;
    let m = omega.rem_euclid(p.heller_period() as i64) as usize;
    let result = decompose_twisted(nu, l, m, p)?;
    let oracle = match max_dim {
        None => None,
        Some(limit) => {
            let run = || -> Result<(KNDecompositionJson, StableElement), stablerep_oracle::OracleError> {
                let v = green_module(p, Basis { l, m })?;
                let d = decompose_kn(&schur_apply_limited(nu, &v, limit)?)?;
                Ok((d.to_json(), green_transport(&d)?))
            };
            let (kn, decomposition) = run().map_err(|e| UsageError(format!("oracle: {e}")))?;
            Some(OracleReport {
                kn,
                display: decomposition.to_string(),
                agree: decomposition == result.decomposition,
                decomposition,
            })
        }
    };
    let agree = oracle.as_ref().is_none_or(|o| o.agree);
    let report = DecomposeReport {
        display: result.decomposition.to_string(),
        result,
        oracle,
    };
    Ok(Output::emit(format, &report, DecomposeReport::render, agree))
}

#[derive(Debug, Clone, Serialize)]
pub struct TensorReport {
    pub p: OddPrime,
    pub a: String,
    pub b: String,
    pub product: StableElement,
    pub display: String,
}

pub fn tensor(p: OddPrime, a: Basis, b: Basis, format: Format) -> Output {
    let product = StableElement::from_basis(p, a) * StableElement::from_basis(p, b);
    let report = TensorReport {
        p,
        a: a.label(),
        b: b.label(),
        display: product.to_string(),
        product,
    };
    Output::emit(format, &report, |r| format!("{} ⊗ {} = {}\n", r.a, r.b, r.display), true)
}

#[derive(Debug, Clone, Serialize)]
pub struct TablesReport {
    pub p: OddPrime,
    /// `tables[t].cells[h][c]` is the label at height `h`, position `c`.
    pub tables: Vec<TableJson>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TableJson {
    pub table: u8,
    pub cells: Vec<Vec<String>>,
}

fn to_json(t: &HeightTable) -> TableJson {
    TableJson {
        table: t.table,
        cells: t.cells.iter().map(|row| row.iter().map(Basis::label).collect()).collect(),
    }
}

/// Both height/position tables. The table format is what
/// [`HeightTable::parse`] reads back.
pub fn tables(p: OddPrime, format: Format) -> Output {
    let [t1, t2] = height_position_tables(p);
    let report = TablesReport {
        p,
        tables: vec![to_json(&t1), to_json(&t2)],
    };
    Output::emit(format, &report, |_| format!("{}\n{}", t1.render(), t2.render()), true)
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassifyReport {
    pub p: OddPrime,
    pub nu: Partition,
    pub l: usize,
    pub omega: usize,
    pub pl_small: bool,
    pub projective_predicted: bool,
    pub irreducible_predicted: bool,
    /// The matching family, for untwisted inputs.
    pub case: Option<Verdict>,
    /// The family from the `(p,l)`-small list, when it applies.
    pub small_case: Option<Verdict>,
    /// The index `i` with `(H^F ∪ {i}) \ {1} = C^F`, when it applies.
    pub multiset_index: Option<i64>,
    pub projective: bool,
    pub stably_irreducible: bool,
    pub display: String,
    pub agree: bool,
}

impl ClassifyReport {
    fn render(&self) -> String {
        let mut out = format!("ν = {}, l = {}, Ω-twist {}, p = {}\n", self.nu, self.l, self.omega, self.p);
        out.push_str(&format!("(p,l)-small: {}\n", yes_no(self.pl_small)));
        if let Some(v) = self.case {
            out.push_str(&format!("case: {v}\n"));
        }
        if let Some(v) = self.small_case {
            out.push_str(&format!("(p,l)-small case: {v}\n"));
        }
        if self.pl_small {
            match self.multiset_index {
                Some(i) => out.push_str(&format!("multiset criterion: holds with i = {i}\n")),
                None => out.push_str("multiset criterion: fails\n"),
            }
        }
        out.push_str(&format!(
            "predicted: projective {}, stably irreducible {}\n",
            yes_no(self.projective_predicted),
            yes_no(self.irreducible_predicted)
        ));
        out.push_str(&format!(
            "computed: projective {}, stably irreducible {}\n",
            yes_no(self.projective),
            yes_no(self.stably_irreducible)
        ));
        out.push_str(&format!("decomposition: {}\n", self.display));
        out.push_str(if self.agree { "AGREE\n" } else { "DISAGREE\n" });
        out
    }
}

fn classify_point(p: OddPrime, nu: &Partition, l: usize, omega: usize) -> Result<ClassifyReport, UsageError> {
    let r = decompose_twisted(nu, l, omega, p)?;
    let pl_small = omega == 0 && nu.is_pl_small(p, l)?;
    let (projective_predicted, irreducible_predicted, case) = if omega == 0 {
        let v = is_stably_irreducible_theorem(nu, l, p)?;
        (is_projective_theorem(nu, l, p)?, v.is_stably_irreducible(), Some(v))
    } else {
        (
            is_projective_twisted_theorem(nu, l, omega, p)?,
            is_stably_irreducible_twisted_theorem(nu, l, omega, p)?,
            None,
        )
    };
    let (small_case, multiset_index) = if pl_small {
        (Some(is_stably_irreducible_pl_small(nu, l, p)?), multiset_criterion(nu, l, p)?)
    } else {
        (None, None)
    };
    let mut agree = projective_predicted == r.projective && irreducible_predicted == r.stably_irreducible;
    if pl_small {
        agree &= small_case.is_some_and(|v| v.is_stably_irreducible() == r.stably_irreducible);
        agree &= multiset_index.is_some() == r.stably_irreducible;
    }
    Ok(ClassifyReport {
        p,
        nu: nu.clone(),
        l,
        omega,
        pl_small,
        projective_predicted,
        irreducible_predicted,
        case,
        small_case,
        multiset_index,
        projective: r.projective,
        stably_irreducible: r.stably_irreducible,
        display: r.decomposition.to_string(),
        agree,
    })
}

/// Every closed-form classification at one point, next to the `Θ` answer.
pub fn classify(p: OddPrime, nu: &Partition, l: usize, omega: i64, format: Format) -> Result<Output, UsageError> {
    check_degree(p, l)?;
    nu.require_p_small(p)?;
    let omega = omega.rem_euclid(p.heller_period() as i64) as usize;
    let report = classify_point(p, nu, l, omega)?;
    let agree = report.agree;
    Ok(Output::emit(format, &report, ClassifyReport::render, agree))
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanRow {
    pub nu: Partition,
    pub l: usize,
    pub projective: bool,
    pub stably_irreducible: bool,
    pub case: Verdict,
    pub display: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanReport {
    pub p: OddPrime,
    pub omega: usize,
    pub max_size: usize,
    pub rows: Vec<ScanRow>,
    pub projective: usize,
    pub stably_irreducible: usize,
}

impl ScanReport {
    fn render(&self) -> String {
        let mut out = String::new();
        let width = self.rows.iter().map(|r| r.nu.to_string().chars().count()).max().unwrap_or(1);
        for r in &self.rows {
            let flag = match (r.projective, r.stably_irreducible) {
                (true, _) => "P",
                (false, true) => "S",
                _ => "-",
            };
            let nu = r.nu.to_string();
            let pad = " ".repeat(width - nu.chars().count());
            out.push_str(&format!("{nu}{pad}  l = {:<2} {flag}  {}\n", r.l, r.display));
        }
        out.push_str(&format!(
            "{} inputs at p = {}, Ω-twist {}: {} projective, {} stably irreducible\n",
            self.rows.len(),
            self.p,
            self.omega,
            self.projective,
            self.stably_irreducible
        ));
        out
    }
}

/// `∇^ν(Ω^m Sym^l E)` for every `ν` with `|ν| ≤ max_size` and every `l`,
/// sorted by `(|ν|, ν, l)`.
pub fn scan(p: OddPrime, omega: i64, max_size: Option<usize>, format: Format) -> Result<Output, UsageError> {
    let max_size = max_size.unwrap_or(p.as_usize() - 1).min(p.as_usize() - 1);
    let omega = omega.rem_euclid(p.heller_period() as i64) as usize;
    let mut rows = Vec::new();
    for n in 0..=max_size {
        for nu in Partition::all_of_size(n) {
            for l in 0..=p.as_usize() - 2 {
                let r = decompose_twisted(&nu, l, omega, p)?;
                rows.push(ScanRow {
                    display: r.decomposition.to_string(),
                    nu: nu.clone(),
                    l,
                    projective: r.projective,
                    stably_irreducible: r.stably_irreducible,
                    case: r.theorem_case,
                });
            }
        }
    }
    let report = ScanReport {
        p,
        omega,
        max_size,
        projective: rows.iter().filter(|r| r.projective).count(),
        stably_irreducible: rows.iter().filter(|r| r.stably_irreducible).count(),
        rows,
    };
    Ok(Output::emit(format, &report, ScanReport::render, true))
}
