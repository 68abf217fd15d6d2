//! Spectrum-table documents with deterministic JSON and CSV renderings.
//!
//! Rationals are serialized as `[numerator, denominator]` pairs of decimal
//! strings and multiplicities as decimal strings, so every value round-trips
//! exactly; nothing is ever rendered as a float. Identical requests produce
//! identical bytes regardless of the worker count: rows are generated in
//! (j, q, ε) order and merged in order.

use rayon::prelude::*;
use serde::Serialize;

use crate::closed_form::{
    d_odd_eigen, d_odd_k_eigen, higher_spin_eigen, higher_spin_sq_eigen, p_k_eigen, p_k_sq_eigen,
    spectral_z, tt_star_eigen, GammaRatioSpec, ZVariant,
};
use crate::engine::{OperatorKind, SpectrumTable};
use crate::rep::weyl_dim;
use crate::weights::{enumerate_labels, label_to_weight, BundleSpec, Family, IsotypicLabel, Sign};
use crate::{Error, Rational, Result};

/// The operators a table can be generated for. `order_2r` is fixed at 1 for
/// the first-order operators and echoes the requested order for the
/// spectral-function and factored families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableOperator {
    /// First-order higher spin operator (odd n, symmetric family).
    HigherSpin,
    /// Its square (even n, symmetric family).
    HigherSpinSquared,
    /// Gamma-ratio spectral function of odd order 2r (form family).
    SpectralZ { two_r: u64 },
    /// Factored odd-order operator of order 2r = 2l + 1 (form family). For
    /// even n these are the eigenvalues of the chirality-restored operator.
    DOdd { two_r: u64 },
    /// First-order form-family operator; for even n the square is reported.
    Pk,
    /// The second-order piece T_{k−1} T*_{k−1} (form family, k >= 1).
    TTstar,
}

impl TableOperator {
    pub fn name(&self) -> &'static str {
        match self {
            TableOperator::HigherSpin => "higher-spin",
            TableOperator::HigherSpinSquared => "higher-spin-squared",
            TableOperator::SpectralZ { .. } => "Z",
            TableOperator::DOdd { .. } => "D-odd",
            TableOperator::Pk => "P_k",
            TableOperator::TTstar => "TTstar",
        }
    }

    /// Differential order echoed into the document.
    fn order_2r(&self) -> u64 {
        match self {
            TableOperator::HigherSpin | TableOperator::Pk => 1,
            TableOperator::HigherSpinSquared | TableOperator::TTstar => 2,
            TableOperator::SpectralZ { two_r } | TableOperator::DOdd { two_r } => *two_r,
        }
    }
}

/// A table generation request.
#[derive(Clone, Copy, Debug)]
pub struct TableRequest {
    pub bundle: BundleSpec,
    pub operator: TableOperator,
    pub j_max: u32,
    /// 0 uses all available workers, 1 is fully serial.
    pub threads: usize,
}

fn validate_operator(b: &BundleSpec, op: &TableOperator) -> Result<()> {
    let need = |cond: bool, msg: String| if cond { Ok(()) } else { Err(Error::domain(msg)) };
    match op {
        TableOperator::HigherSpin => {
            need(b.family() == Family::Symmetric, "higher-spin lives on the symmetric family".into())?;
            need(
                b.is_odd(),
                format!("higher-spin has no eigenvalues for even n = {}; use higher-spin-squared", b.n()),
            )
        }
        TableOperator::HigherSpinSquared => {
            need(b.family() == Family::Symmetric, "higher-spin-squared lives on the symmetric family".into())?;
            need(!b.is_odd(), format!("higher-spin-squared needs even n, got {}", b.n()))
        }
        TableOperator::SpectralZ { two_r } | TableOperator::DOdd { two_r } => {
            need(b.family() == Family::Form, format!("{} lives on the form family", op.name()))?;
            need(*two_r % 2 == 1, format!("{} needs an odd order 2r, got {two_r}", op.name()))
        }
        TableOperator::Pk | TableOperator::TTstar => {
            need(b.family() == Family::Form, format!("{} lives on the form family", op.name()))?;
            need(b.k() >= 1, format!("{} needs k >= 1", op.name()))
        }
    }
}

/// The exact eigenvalue of `op` on the summand `lab`, or `None` when the
/// value is pole-marked (singular spectral-function normalization).
pub fn closed_eigenvalue(
    b: &BundleSpec,
    op: &TableOperator,
    lab: &IsotypicLabel,
) -> Result<Option<Rational>> {
    b.validate_label(lab)?;
    let eps = lab.eps.unwrap_or(Sign::Plus);
    let q = lab.q.unwrap_or(0);
    let value = match *op {
        TableOperator::HigherSpin => higher_spin_eigen(b.n(), b.k(), lab.j, q, eps),
        TableOperator::HigherSpinSquared => higher_spin_sq_eigen(b.n(), b.k(), lab.j, q),
        TableOperator::SpectralZ { two_r } => {
            let variant = match (b.is_odd(), b.k()) {
                (true, 0) => ZVariant::SpinorOdd { eps },
                (false, 0) => ZVariant::SpinorEven,
                (true, k) => ZVariant::FormOdd { k, q, eps },
                (false, k) => ZVariant::FormEven { k, q },
            };
            spectral_z(&GammaRatioSpec::new(b.n(), two_r, lab.j, variant)?)
        }
        TableOperator::DOdd { two_r } => {
            let l = ((two_r - 1) / 2) as u32;
            if b.k() == 0 {
                Ok(d_odd_eigen(b.n(), l, lab.j, eps))
            } else {
                d_odd_k_eigen(b.n(), b.k(), l, lab.j, q, eps)
            }
        }
        TableOperator::Pk => {
            if b.is_odd() {
                p_k_eigen(b.n(), b.k(), lab.j, q, eps)
            } else {
                p_k_sq_eigen(b.n(), b.k(), lab.j, q)
            }
        }
        TableOperator::TTstar => tt_star_eigen(b.n(), b.k(), lab.j, q),
    };
    match value {
        Ok(v) => Ok(Some(v)),
        Err(Error::Pole(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BundleDoc {
    pub n: u32,
    pub k: u32,
    pub family: String,
    pub chirality: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct OperatorDoc {
    pub kind: String,
    pub order_2r: [String; 2],
}

#[derive(Clone, Debug, Serialize)]
pub struct TableEntry {
    pub eps: Option<i64>,
    pub j: u32,
    pub q: Option<u32>,
    pub weight: Vec<[String; 2]>,
    /// `None` marks a pole (value not determined).
    pub eigenvalue: Option<[String; 2]>,
    pub multiplicity: String,
}

/// Schema version 1 table document.
#[derive(Clone, Debug, Serialize)]
pub struct TableDocument {
    pub schema_version: u32,
    pub bundle: BundleDoc,
    pub operator: OperatorDoc,
    pub entries: Vec<TableEntry>,
}

impl TableDocument {
    pub fn has_poles(&self) -> bool {
        self.entries.iter().any(|e| e.eigenvalue.is_none())
    }
}

fn rational_pair(v: &Rational) -> [String; 2] {
    [v.numer().to_string(), v.denom().to_string()]
}

fn bundle_doc(b: &BundleSpec) -> BundleDoc {
    BundleDoc {
        n: b.n(),
        k: b.k(),
        family: b.family().as_str().to_string(),
        chirality: b.chirality().map(|c| c.as_str().to_string()),
    }
}

fn make_entry(b: &BundleSpec, op: &TableOperator, lab: &IsotypicLabel) -> Result<TableEntry> {
    let weight = label_to_weight(b, lab)?;
    let eigenvalue = closed_eigenvalue(b, op, lab)?;
    let multiplicity = weyl_dim(&weight, b.n() + 1)?;
    Ok(TableEntry {
        eps: lab.eps.map(Sign::value),
        j: lab.j,
        q: lab.q,
        weight: weight
            .entries()
            .iter()
            .map(|h| {
                let (num, den) = h.numer_denom();
                [num.to_string(), den.to_string()]
            })
            .collect(),
        eigenvalue: eigenvalue.as_ref().map(rational_pair),
        multiplicity: multiplicity.to_string(),
    })
}

/// Builds the full table for a request. Rows are independent, so they are
/// partitioned across workers by label; the output is byte-identical for any
/// worker count.
pub fn build_table(req: &TableRequest) -> Result<TableDocument> {
    validate_operator(&req.bundle, &req.operator)?;
    let labels = enumerate_labels(&req.bundle, req.j_max);
    let b = req.bundle;
    let op = req.operator;
    let entries: Result<Vec<TableEntry>> = match req.threads {
        1 => labels.iter().map(|lab| make_entry(&b, &op, lab)).collect(),
        0 => labels.par_iter().map(|lab| make_entry(&b, &op, lab)).collect(),
        t => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| Error::internal(format!("worker pool: {e}")))?
            .install(|| labels.par_iter().map(|lab| make_entry(&b, &op, lab)).collect()),
    };
    Ok(TableDocument {
        schema_version: 1,
        bundle: bundle_doc(&req.bundle),
        operator: OperatorDoc {
            kind: op.name().to_string(),
            order_2r: [op.order_2r().to_string(), "1".to_string()],
        },
        entries: entries?,
    })
}

/// Serializes an engine-produced spectrum into the same document format.
pub fn from_spectrum_table(table: &SpectrumTable) -> TableDocument {
    let kind = match table.operator.kind() {
        OperatorKind::HigherSpin => "higher-spin",
        OperatorKind::SpectralFunction => "Z",
        OperatorKind::FactoredOddOrder => "D-odd",
    };
    TableDocument {
        schema_version: 1,
        bundle: bundle_doc(&table.bundle),
        operator: OperatorDoc {
            kind: kind.to_string(),
            order_2r: rational_pair(table.operator.order_2r()),
        },
        entries: table
            .entries
            .iter()
            .map(|e| TableEntry {
                eps: e.label.eps.map(Sign::value),
                j: e.label.j,
                q: e.label.q,
                weight: e
                    .weight
                    .entries()
                    .iter()
                    .map(|h| {
                        let (num, den) = h.numer_denom();
                        [num.to_string(), den.to_string()]
                    })
                    .collect(),
                eigenvalue: e.eigenvalue.as_ref().map(rational_pair),
                multiplicity: e.multiplicity.to_string(),
            })
            .collect(),
    }
}

/// Compact JSON with a trailing newline.
pub fn to_json_bytes(doc: &TableDocument) -> Vec<u8> {
    let mut bytes = serde_json::to_vec(doc).expect("table documents always serialize");
    bytes.push(b'\n');
    bytes
}

/// Fixed-column CSV: `eps,j,q,eig_num,eig_den,multiplicity,weight`, weight as
/// semicolon-joined `num/den` entries. Absent fields (ε for even n, q for
/// k = 0 forms, pole-marked eigenvalues) render as empty columns.
pub fn to_csv_bytes(doc: &TableDocument) -> Vec<u8> {
    let mut out = String::from("eps,j,q,eig_num,eig_den,multiplicity,weight\n");
    for e in &doc.entries {
        let eps = match e.eps {
            Some(1) => "+1",
            Some(-1) => "-1",
            _ => "",
        };
        let q = e.q.map(|q| q.to_string()).unwrap_or_default();
        let (num, den) = match &e.eigenvalue {
            Some([n, d]) => (n.as_str(), d.as_str()),
            None => ("", ""),
        };
        let weight = e
            .weight
            .iter()
            .map(|[n, d]| format!("{n}/{d}"))
            .collect::<Vec<_>>()
            .join(";");
        out.push_str(&format!(
            "{eps},{},{q},{num},{den},{},{weight}\n",
            e.j, e.multiplicity
        ));
    }
    out.into_bytes()
}
