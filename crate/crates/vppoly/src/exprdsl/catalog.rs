//! The textual formula catalog and its cross-check against the builders.

use super::eval::eval;
use super::parser::parse;
use super::{Expr, ExprAst, IntExpr, IntNode, ParseError};
use crate::formulas::{self, FormulaId, ParamBinding};
use rayon::prelude::*;
use thiserror::Error;

/// The catalog shipped with the crate.
pub const DEFAULT_CATALOG_TEXT: &str = include_str!("catalog.txt");

/// One catalog line: a formula id and its textual transcription.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub id: FormulaId,
    pub source: String,
    pub ast: ExprAst,
    pub line: usize,
}

/// A parsed catalog file.
#[derive(Clone, Debug, Default)]
pub struct Catalog {
    pub entries: Vec<CatalogEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("line {line}: expected `<formula-id> = <expression>`")]
    MissingEquals { line: usize },
    #[error("line {line}: unknown formula id `{id}`")]
    UnknownId { line: usize, id: String },
    #[error("line {line}: formula `{id}` takes parameters outside g/g1/g2")]
    NotExpressible { line: usize, id: &'static str },
    #[error("line {line}: duplicate entry for `{id}`")]
    Duplicate { line: usize, id: &'static str },
    #[error("line {line}: {source}")]
    Parse { line: usize, source: ParseError },
}

/// Whether a formula can be written in the expression language at all.
fn dsl_expressible(id: FormulaId) -> bool {
    !matches!(
        id,
        FormulaId::ProjSpace | FormulaId::Grassmannian | FormulaId::ModuliDim
    )
}

/// Smallest genus the catalog transcription of `id` is evaluated at. For
/// `d1` and `blowup` the displayed difference forms contain `t^(2g-6)`, so
/// their textual forms start at `g = 3` even though the builders accept less.
fn catalog_min_genus(id: FormulaId) -> u32 {
    match id {
        FormulaId::D1 | FormulaId::BlowUp => 3,
        other => other.min_genus(),
    }
}

impl Catalog {
    /// Parses catalog text: one `<formula-id> = <expression>` per line,
    /// `#` starts a comment, blank lines are skipped.
    pub fn parse(text: &str) -> Result<Catalog, CatalogError> {
        let mut entries: Vec<CatalogEntry> = Vec::new();
        for (idx, raw_line) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw_line.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (name, expr_text) = content
                .split_once('=')
                .ok_or(CatalogError::MissingEquals { line })?;
            let name = name.trim();
            let id = FormulaId::from_name(name).ok_or_else(|| CatalogError::UnknownId {
                line,
                id: name.to_string(),
            })?;
            if !dsl_expressible(id) {
                return Err(CatalogError::NotExpressible { line, id: id.name() });
            }
            if entries.iter().any(|e| e.id == id) {
                return Err(CatalogError::Duplicate { line, id: id.name() });
            }
            let source = expr_text.trim().to_string();
            let ast = parse(&source).map_err(|source| CatalogError::Parse { line, source })?;
            entries.push(CatalogEntry { id, source, ast, line });
        }
        Ok(Catalog { entries })
    }

    /// The embedded catalog.
    pub fn builtin() -> Catalog {
        Catalog::parse(DEFAULT_CATALOG_TEXT).expect("embedded catalog is valid")
    }

    pub fn get(&self, id: FormulaId) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.id == id)
    }
}

/// A disagreement between a catalog transcription and the builder.
#[derive(Clone, Debug)]
pub struct CrosscheckMismatch {
    pub id: FormulaId,
    pub params: ParamBinding,
    pub detail: String,
}

/// Result of a catalog cross-check run.
#[derive(Clone, Debug, Default)]
pub struct CrosscheckReport {
    /// Number of (formula, binding) comparisons performed.
    pub checked: usize,
    pub mismatches: Vec<CrosscheckMismatch>,
}

impl CrosscheckReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Bindings a catalog entry is compared at: all parameters up to `g_max`.
fn crosscheck_bindings(id: FormulaId, g_max: u32) -> Vec<ParamBinding> {
    if id.takes_pair() {
        let mut out = Vec::new();
        for g1 in 1..=g_max {
            for g2 in 1..=g_max {
                out.push(ParamBinding::pair(g1, g2));
            }
        }
        out
    } else {
        (catalog_min_genus(id)..=g_max).map(ParamBinding::genus).collect()
    }
}

fn check_one(entry: &CatalogEntry, params: &ParamBinding) -> Option<CrosscheckMismatch> {
    let mismatch = |detail: String| CrosscheckMismatch {
        id: entry.id,
        params: params.clone(),
        detail,
    };
    let built = match formulas::compute(entry.id, params) {
        Ok(p) => p,
        Err(e) => return Some(mismatch(format!("builder failed: {}", e))),
    };
    let evaluated = match eval(&entry.ast, params) {
        Ok(v) => v,
        Err(e) => return Some(mismatch(format!("catalog text failed to evaluate: {}", e))),
    };
    match evaluated.to_polynomial() {
        Ok(p) if p == built => None,
        Ok(p) => Some(mismatch(format!(
            "catalog text disagrees with builder: text gives {}, builder gives {}",
            p, built
        ))),
        Err(e) => Some(mismatch(format!("catalog text is not polynomial: {}", e))),
    }
}

/// Evaluates every catalog formula under every binding with parameters up to
/// `g_max` and compares against the programmatic builders exactly.
/// Mismatches are report entries, not errors. Requires `g_max >= 2`.
pub fn catalog_crosscheck(catalog: &Catalog, g_max: u32) -> CrosscheckReport {
    assert!(g_max >= 2, "cross-check range must satisfy g_max >= 2");
    let mut work: Vec<(&CatalogEntry, ParamBinding)> = Vec::new();
    for entry in &catalog.entries {
        for binding in crosscheck_bindings(entry.id, g_max) {
            work.push((entry, binding));
        }
    }
    let mut mismatches: Vec<CrosscheckMismatch> = work
        .par_iter()
        .filter_map(|(entry, params)| check_one(entry, params))
        .collect();
    mismatches.sort_by(|a, b| (a.id.name(), &a.params).cmp(&(b.id.name(), &b.params)));
    CrosscheckReport {
        checked: work.len(),
        mismatches,
    }
}

/// A single exponent-perturbed variant of a formula source line.
#[derive(Clone, Debug)]
pub struct MutatedFormula {
    pub source: String,
    pub description: String,
}

fn collect_exponent_ints(ast: &ExprAst, out: &mut Vec<(super::SourceSpan, i64)>) {
    match &ast.node {
        Expr::Int(..) | Expr::Var | Expr::Param(..) => {}
        Expr::Neg(a) => collect_exponent_ints(a, out),
        Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
            collect_exponent_ints(a, out);
            collect_exponent_ints(b, out);
        }
        Expr::Pow(base, exponent) => {
            collect_exponent_ints(base, out);
            collect_int_ints(exponent, out);
        }
    }
}

fn collect_int_ints(ie: &IntExpr, out: &mut Vec<(super::SourceSpan, i64)>) {
    match &ie.node {
        IntNode::Int(n) => out.push((ie.span, *n)),
        IntNode::Param(..) => {}
        IntNode::Neg(a) => collect_int_ints(a, out),
        IntNode::Add(a, b) | IntNode::Sub(a, b) | IntNode::Mul(a, b) => {
            collect_int_ints(a, out);
            collect_int_ints(b, out);
        }
    }
}

/// Every variant of `source` obtained by perturbing a single integer literal
/// inside an exponent by +1 or -1. Used by the mutation-robustness tests:
/// each variant must disagree with the builders somewhere.
pub fn exponent_mutations(source: &str) -> Result<Vec<MutatedFormula>, ParseError> {
    let ast = parse(source)?;
    let mut spans = Vec::new();
    collect_exponent_ints(&ast, &mut spans);
    let mut out = Vec::new();
    for (span, value) in spans {
        for delta in [-1i64, 1] {
            let mutated = value + delta;
            let mut text = String::with_capacity(source.len() + 2);
            text.push_str(&source[..span.start]);
            text.push_str(&mutated.to_string());
            text.push_str(&source[span.end..]);
            out.push(MutatedFormula {
                source: text,
                description: format!(
                    "exponent {} at bytes {} changed to {}",
                    value, span, mutated
                ),
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_catalog_parses() {
        let catalog = Catalog::builtin();
        assert_eq!(catalog.entries.len(), 16);
        assert!(catalog.get(FormulaId::NewsteadOdd).is_some());
        assert!(catalog.get(FormulaId::FDiff).is_some());
        assert!(catalog.get(FormulaId::ProjSpace).is_none());
    }

    #[test]
    fn builtin_catalog_crosschecks_at_small_genus() {
        let report = catalog_crosscheck(&Catalog::builtin(), 3);
        assert!(
            report.is_clean(),
            "mismatches: {:?}",
            report.mismatches
        );
        assert!(report.checked > 0);
    }

    #[test]
    fn corrupted_exponent_is_reported() {
        // the deliberate corruption 2g -> 2g+1 in the leading Jacobian factor
        let text = "newstead-odd = (1+t)^(2*g+1) * ((1+t^3)^(2*g) - t^(2*g)*(1+t)^(2*g)) / ((1-t^2)*(1-t^4))";
        let catalog = Catalog::parse(text).unwrap();
        let report = catalog_crosscheck(&catalog, 2);
        assert!(!report.is_clean());
        assert_eq!(report.mismatches[0].id, FormulaId::NewsteadOdd);
    }

    #[test]
    fn empty_catalog_gives_empty_report() {
        let catalog = Catalog::parse("# nothing here\n\n").unwrap();
        assert!(catalog.entries.is_empty());
        let report = catalog_crosscheck(&catalog, 4);
        assert_eq!(report.checked, 0);
        assert!(report.is_clean());
    }

    #[test]
    fn catalog_parse_errors() {
        assert!(matches!(
            Catalog::parse("newstead-odd (1+t)"),
            Err(CatalogError::MissingEquals { line: 1 })
        ));
        assert!(matches!(
            Catalog::parse("mystery = 1+t"),
            Err(CatalogError::UnknownId { .. })
        ));
        assert!(matches!(
            Catalog::parse("proj-space = 1+t^2"),
            Err(CatalogError::NotExpressible { .. })
        ));
        assert!(matches!(
            Catalog::parse("curve = 1\ncurve = 2"),
            Err(CatalogError::Duplicate { .. })
        ));
        assert!(matches!(
            Catalog::parse("curve = 1 + ("),
            Err(CatalogError::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn mutation_enumeration() {
        let muts = exponent_mutations("t^2 + (1+t)^(2*g)").unwrap();
        // two integer literals inside exponents, two deltas each
        assert_eq!(muts.len(), 4);
        assert!(muts.iter().any(|m| m.source == "t^1 + (1+t)^(2*g)"));
        assert!(muts.iter().any(|m| m.source == "t^3 + (1+t)^(2*g)"));
        assert!(muts.iter().any(|m| m.source == "t^2 + (1+t)^(1*g)"));
        assert!(muts.iter().any(|m| m.source == "t^2 + (1+t)^(3*g)"));
        // coefficients in the main grammar are not exponents
        assert!(exponent_mutations("2*t + 1/2").unwrap().is_empty());
    }
}
