//! Serializable reports and the three output renderings.
//!
//! JSON objects keep a fixed key order (struct declaration order), so
//! parsing a report and re-serializing it is byte-identical. CSV columns
//! mirror the JSON keys; list values are semicolon-joined.

use serde::{Deserialize, Serialize};

use nsg_core::constructions::{predicted_presentation_size, Checks};
use nsg_core::presentations::{FactorizationGraph, Presentation};
use nsg_core::{Family, FamilyReport, GapProfile, NumericalSemigroup};

/// Verification record for one parameter triple. Key order is the report
/// schema: family, e, q, d, m, generators, frobenius_closed,
/// frobenius_computed, genus, symmetric, mu, mu_predicted, checks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceReport {
    pub family: String,
    pub e: i64,
    pub q: i64,
    pub d: i64,
    pub m: i64,
    pub generators: Vec<i64>,
    pub frobenius_closed: i64,
    pub frobenius_computed: i64,
    pub genus: i64,
    pub symmetric: bool,
    pub mu: i64,
    pub mu_predicted: i64,
    pub checks: ChecksReport,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChecksReport {
    pub minimality: bool,
    pub apery_match: bool,
    pub frobenius_match: bool,
    pub symmetry: bool,
    pub mu_match: bool,
    pub unique_expression: bool,
    pub notsum: bool,
}

impl From<Checks> for ChecksReport {
    fn from(c: Checks) -> Self {
        ChecksReport {
            minimality: c.minimality,
            apery_match: c.apery_match,
            frobenius_match: c.frobenius_match,
            symmetry: c.symmetry,
            mu_match: c.mu_match,
            unique_expression: c.unique_expression,
            notsum: c.notsum,
        }
    }
}

impl ChecksReport {
    pub fn iter(&self) -> impl Iterator<Item = (&'static str, bool)> {
        [
            ("minimality", self.minimality),
            ("apery_match", self.apery_match),
            ("frobenius_match", self.frobenius_match),
            ("symmetry", self.symmetry),
            ("mu_match", self.mu_match),
            ("unique_expression", self.unique_expression),
            ("notsum", self.notsum),
        ]
        .into_iter()
    }

    pub fn all_pass(&self) -> bool {
        self.iter().all(|(_, v)| v)
    }

    pub fn first_failure(&self) -> Option<&'static str> {
        self.iter().find(|&(_, v)| !v).map(|(name, _)| name)
    }

    fn csv_cell(&self) -> String {
        self.iter()
            .map(|(name, v)| format!("{name}={v}"))
            .collect::<Vec<_>>()
            .join(";")
    }
}

fn family_tag(f: Family) -> String {
    match f {
        Family::S => "s".to_string(),
        Family::T => "t".to_string(),
    }
}

impl From<&FamilyReport> for InstanceReport {
    fn from(r: &FamilyReport) -> Self {
        InstanceReport {
            family: family_tag(r.family),
            e: r.e,
            q: r.q,
            d: r.d,
            m: r.m,
            generators: r.generators.clone(),
            frobenius_closed: r.frobenius_closed,
            frobenius_computed: r.frobenius_computed,
            genus: r.genus,
            symmetric: r.symmetric,
            mu: r.presentation_cardinality,
            mu_predicted: predicted_presentation_size(r.e).expect("e was validated"),
            checks: r.checks.into(),
        }
    }
}

pub fn join_semicolon<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(";")
}

pub const REPORT_CSV_HEADER: &str = "family,e,q,d,m,generators,frobenius_closed,\
frobenius_computed,genus,symmetric,mu,mu_predicted,checks";

impl InstanceReport {
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.family,
            self.e,
            self.q,
            self.d,
            self.m,
            join_semicolon(&self.generators),
            self.frobenius_closed,
            self.frobenius_computed,
            self.genus,
            self.symmetric,
            self.mu,
            self.mu_predicted,
            self.checks.csv_cell()
        )
    }

    pub fn table(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("family: {}\n", self.family));
        out.push_str(&format!("e: {}\nq: {}\nd: {}\nm: {}\n", self.e, self.q, self.d, self.m));
        out.push_str(&format!(
            "generators: {}\n",
            self.generators.iter().map(i64::to_string).collect::<Vec<_>>().join(", ")
        ));
        out.push_str(&format!("frobenius_closed: {}\n", self.frobenius_closed));
        out.push_str(&format!("frobenius_computed: {}\n", self.frobenius_computed));
        out.push_str(&format!("genus: {}\n", self.genus));
        out.push_str(&format!("symmetric: {}\n", self.symmetric));
        out.push_str(&format!("mu: {}\n", self.mu));
        out.push_str(&format!("mu_predicted: {}\n", self.mu_predicted));
        out.push_str("checks:\n");
        for (name, v) in self.checks.iter() {
            out.push_str(&format!("  {name}: {v}\n"));
        }
        out
    }
}

/// Apéry set of one semigroup; `elements[r]` is the class-r element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AperyReport {
    pub generators: Vec<i64>,
    pub base: i64,
    pub elements: Vec<i64>,
}

impl AperyReport {
    pub fn csv(&self) -> String {
        let mut out = String::from("base,residue,element\n");
        for (r, &w) in self.elements.iter().enumerate() {
            out.push_str(&format!("{},{},{}\n", self.base, r, w));
        }
        out
    }

    pub fn table(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "generators: {}\n",
            self.generators.iter().map(i64::to_string).collect::<Vec<_>>().join(", ")
        ));
        out.push_str(&format!("base: {}\n", self.base));
        out.push_str("residue  element\n");
        for (r, &w) in self.elements.iter().enumerate() {
            out.push_str(&format!("{r:<7}  {w}\n"));
        }
        out
    }
}

/// Gap profile of one semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapsReport {
    pub generators: Vec<i64>,
    pub frobenius: i64,
    pub genus: i64,
    pub gaps: Vec<i64>,
}

impl GapsReport {
    pub fn new(s: &NumericalSemigroup, profile: &GapProfile) -> Self {
        GapsReport {
            generators: s.generators().to_vec(),
            frobenius: profile.frobenius(),
            genus: profile.genus(),
            gaps: profile.gaps().to_vec(),
        }
    }

    pub fn csv(&self) -> String {
        format!(
            "generators,frobenius,genus,gaps\n{},{},{},{}\n",
            join_semicolon(&self.generators),
            self.frobenius,
            self.genus,
            join_semicolon(&self.gaps)
        )
    }

    pub fn table(&self) -> String {
        format!(
            "generators: {}\nfrobenius: {}\ngenus: {}\ngaps: {}\n",
            self.generators.iter().map(i64::to_string).collect::<Vec<_>>().join(", "),
            self.frobenius,
            self.genus,
            self.gaps.iter().map(i64::to_string).collect::<Vec<_>>().join(", ")
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiReport {
    pub element: i64,
    pub components: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationReport {
    pub element: i64,
    pub lhs: Vec<u64>,
    pub rhs: Vec<u64>,
}

/// Betti elements, their component counts, and a minimal presentation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationReport {
    pub generators: Vec<i64>,
    pub betti_elements: Vec<BettiReport>,
    pub relations: Vec<RelationReport>,
    pub mu: usize,
}

impl PresentationReport {
    pub fn new(s: &NumericalSemigroup, betti: &[i64], presentation: &Presentation) -> Self {
        let betti_elements = betti
            .iter()
            .map(|&b| BettiReport {
                element: b,
                components: FactorizationGraph::of_element(s, b).component_count(),
            })
            .collect();
        let relations = presentation
            .relations()
            .iter()
            .map(|r| RelationReport {
                element: r.element,
                lhs: r.lhs.exponents().to_vec(),
                rhs: r.rhs.exponents().to_vec(),
            })
            .collect();
        PresentationReport {
            generators: s.generators().to_vec(),
            betti_elements,
            relations,
            mu: presentation.cardinality(),
        }
    }

    pub fn csv(&self) -> String {
        let mut out = String::from("element,lhs,rhs\n");
        for r in &self.relations {
            out.push_str(&format!(
                "{},{},{}\n",
                r.element,
                join_semicolon(&r.lhs),
                join_semicolon(&r.rhs)
            ));
        }
        out
    }

    pub fn table(&self) -> String {
        let tuple = |xs: &[u64]| {
            let inner = xs.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
            format!("({inner})")
        };
        let mut out = String::new();
        out.push_str(&format!(
            "generators: {}\n",
            self.generators.iter().map(i64::to_string).collect::<Vec<_>>().join(", ")
        ));
        out.push_str("betti elements:\n");
        for b in &self.betti_elements {
            out.push_str(&format!("  {}: {} components\n", b.element, b.components));
        }
        out.push_str("relations:\n");
        for r in &self.relations {
            out.push_str(&format!("  {}: {} = {}\n", r.element, tuple(&r.lhs), tuple(&r.rhs)));
        }
        out.push_str(&format!("mu: {}\n", self.mu));
        out
    }
}
