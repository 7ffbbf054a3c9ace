//! Report documents: the analysis summary of a tower and the Galois-action
//! summary, each with stable JSON and a text layout that mirrors the usual
//! presentation (valuation table rows are field levels, columns are x and
//! the generators).
//!
//! JSON keys are emitted in sorted order and the optional Galois
//! cross-check is omitted entirely when absent, so serialized reports are
//! byte-stable and suitable as golden files.

use serde::Serialize;

use crate::error::Error;
use crate::ramification::RamificationReport;
use crate::tower::TowerDescriptor;
use crate::witt::WittTower;

use super::render;

/// The full analysis of one tower, rendered to plain data.
#[derive(Serialize, Clone, PartialEq, Eq, Debug)]
pub struct ReportDocument {
    /// Normalized defining equations, one per level.
    pub equations: Vec<String>,
    /// Jumps recovered from the Galois action, when cross-checking ran.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub galois_crosscheck: Option<Vec<u64>>,
    /// Whether every upper jump is an integer.
    pub hasse_arf: bool,
    pub lower_jumps: Vec<u64>,
    /// Conventions and a record of each normalization step.
    pub notes: Vec<String>,
    /// Minimal-term criterion per level 2..=height.
    pub structural: Vec<bool>,
    /// Generator replacements performed during normalization.
    pub substitutions: Vec<String>,
    /// Exact rationals as strings, "n" or "n/d".
    pub upper_jumps: Vec<String>,
    /// Row k lists v_k(x), v_k(f_1), ..., v_k(f_k) for k = 0..=height.
    pub valuation_table: Vec<Vec<i64>>,
}

impl ReportDocument {
    pub fn from_analysis(
        tower: &TowerDescriptor,
        report: &RamificationReport,
    ) -> Result<ReportDocument, Error> {
        let mut equations = Vec::with_capacity(tower.height());
        for level in 1..=tower.height() {
            equations.push(render::render_equation(tower, level)?);
        }
        let mut notes = vec![
            "valuations follow the pole convention v(x) = -1 at the base, scaled by p per \
             level, so every table entry at a pole is negative; statements quoting a positive \
             generator valuation refer to the absolute value"
                .to_string(),
            "the order function is i(sigma) = v(sigma(f) - f) - v(f) for a test element of \
             valuation prime to p, so G_i = {sigma : i(sigma) >= i}; this runs one below the \
             classical convention that indexes by v(sigma(pi) - pi)"
                .to_string(),
        ];
        let p = tower.prime().get() as i64;
        let mut substitutions = Vec::new();
        for (k, level) in tower.levels().iter().enumerate() {
            if level.substitutions().is_empty() {
                continue;
            }
            let line = render::render_substitution(k + 1, level.substitutions());
            for s in level.substitutions() {
                // the minimal valuation that forced this replacement is p
                // times the valuation of the replacement monomial one
                // level down
                let v = tower.monomial_valuation(&s.monomial, k)? * p;
                notes.push(format!(
                    "level {}: minimal valuation {v} divisible by {p}; applied replacement {line}",
                    k + 1,
                ));
            }
            substitutions.push(line);
        }
        Ok(ReportDocument {
            equations,
            galois_crosscheck: report.galois_jumps.clone(),
            hasse_arf: report.hasse_arf.holds,
            lower_jumps: report.lower_jumps.clone(),
            notes,
            structural: report.structural.clone(),
            substitutions,
            upper_jumps: report.upper_jumps.iter().map(|q| q.to_string()).collect(),
            valuation_table: tower.valuation_table()?,
        })
    }

    pub fn to_json(&self) -> String {
        let mut out =
            serde_json::to_string_pretty(self).expect("report serialization cannot fail");
        out.push('\n');
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str("Defining equations\n");
        for eq in &self.equations {
            out.push_str("  ");
            out.push_str(eq);
            out.push('\n');
        }
        if !self.substitutions.is_empty() {
            out.push_str("Substitutions\n");
            for s in &self.substitutions {
                out.push_str("  ");
                out.push_str(s);
                out.push('\n');
            }
        }
        out.push_str("Valuation table\n");
        out.push_str(&render_table(&self.valuation_table));
        out.push_str(&format!("Lower jumps: {}\n", join_nums(&self.lower_jumps)));
        out.push_str(&format!("Upper jumps: {}\n", self.upper_jumps.join(", ")));
        out.push_str(&format!(
            "Hasse-Arf:   {}\n",
            if self.hasse_arf {
                "holds (every upper jump is an integer)"
            } else {
                "fails (a non-integral upper jump exists)"
            }
        ));
        if !self.structural.is_empty() {
            let verdicts: Vec<String> = self
                .structural
                .iter()
                .enumerate()
                .map(|(i, ok)| format!("level {}: {}", i + 2, if *ok { "pass" } else { "fail" }))
                .collect();
            out.push_str(&format!("Structural:  {}\n", verdicts.join(", ")));
        }
        if let Some(jumps) = &self.galois_crosscheck {
            out.push_str(&format!(
                "Galois:      action reproduces the jumps: {}\n",
                join_nums(jumps)
            ));
        }
        out.push_str("Notes\n");
        for n in &self.notes {
            out.push_str("  - ");
            out.push_str(n);
            out.push('\n');
        }
        out
    }
}

fn join_nums(nums: &[u64]) -> String {
    nums.iter().map(|n| n.to_string()).collect::<Vec<_>>().join(", ")
}

/// Lays out the valuation table with one row per field level and columns
/// for x and each generator, right-aligned.
fn render_table(table: &[Vec<i64>]) -> String {
    let height = table.len().saturating_sub(1);
    let mut header: Vec<String> = vec!["field".into(), "v(x)".into()];
    for j in 1..=height {
        header.push(format!("v(f{j})"));
    }
    let mut rows: Vec<Vec<String>> = vec![header];
    for (k, row) in table.iter().enumerate() {
        let mut cells = vec![format!("F_{k}")];
        cells.extend(row.iter().map(|v| v.to_string()));
        rows.push(cells);
    }
    let columns = rows.iter().map(|r| r.len()).max().unwrap_or(0);
    let widths: Vec<usize> = (0..columns)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.len()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in &rows {
        out.push_str(" ");
        for (c, cell) in row.iter().enumerate() {
            out.push_str(&format!(" {:>width$}", cell, width = widths[c]));
        }
        out.push('\n');
    }
    out
}

/// Summary of the Galois action of the distinguished generator on a
/// Witt-generated tower.
#[derive(Serialize, Clone, PartialEq, Eq, Debug)]
pub struct GaloisDocument {
    /// Rendered images, one line per generator.
    pub generator_images: Vec<String>,
    /// Lower jumps recovered as contact orders of sigma^(p^j).
    pub jumps_from_action: Vec<u64>,
    /// Lower jumps from normalization, for comparison.
    pub lower_jumps: Vec<u64>,
    /// Whether the images satisfy every defining relation.
    pub relations_preserved: bool,
}

impl GaloisDocument {
    pub fn from_witt_tower(wt: &WittTower) -> Result<GaloisDocument, Error> {
        let tower = wt.tower();
        let images = wt.generator_images()?;
        let mut generator_images = Vec::with_capacity(images.len());
        for (i, img) in images.iter().enumerate() {
            generator_images.push(format!(
                "sigma(f{}) = {}",
                i + 1,
                render::render_element(tower, img)?
            ));
        }
        let relations_preserved = wt.verify_relations(&images)?;
        let jumps_from_action = crate::ramification::jumps_from_galois(wt)?;
        Ok(GaloisDocument {
            generator_images,
            jumps_from_action,
            lower_jumps: tower.jumps(),
            relations_preserved,
        })
    }

    pub fn to_json(&self) -> String {
        let mut out =
            serde_json::to_string_pretty(self).expect("report serialization cannot fail");
        out.push('\n');
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str("Generator images\n");
        for line in &self.generator_images {
            out.push_str("  ");
            out.push_str(line);
            out.push('\n');
        }
        out.push_str(&format!(
            "Jumps from the action: {}\n",
            join_nums(&self.jumps_from_action)
        ));
        out.push_str(&format!("Lower jumps:           {}\n", join_nums(&self.lower_jumps)));
        out.push_str(&format!(
            "Relations preserved:   {}\n",
            if self.relations_preserved { "yes" } else { "no" }
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Prime;
    use crate::io::parse::parse_expression;
    use crate::ramification::analyze_tower;
    use crate::tower::TowerElement;
    use crate::witt::build_tower;

    fn prime(v: u32) -> Prime {
        Prime::new(v).unwrap()
    }

    fn p2_report(galois: bool) -> ReportDocument {
        let p = prime(2);
        let vector = vec![
            TowerElement::x_power(p, 1),
            TowerElement::zero(p, 0),
            TowerElement::zero(p, 0),
        ];
        let wt = build_tower(p, &vector).unwrap();
        let analysis = analyze_tower(wt.tower(), galois.then_some(&wt)).unwrap();
        ReportDocument::from_analysis(wt.tower(), &analysis).unwrap()
    }

    #[test]
    fn report_for_the_height_three_tower() {
        let doc = p2_report(false);
        assert_eq!(
            doc.equations,
            vec![
                "f1^2 - f1 = x",
                "f2^2 - f2 = x*f1",
                "f3^2 - f3 = x^2*f2 + x^2*f1 + x*f1*f2 + x^2 + x*f2 + x*f1",
            ]
        );
        assert_eq!(doc.substitutions, vec!["f3 := f\u{0304}3 + x*f2"]);
        assert_eq!(doc.lower_jumps, vec![1, 3, 11]);
        assert_eq!(doc.upper_jumps, vec!["1", "2", "4"]);
        assert!(doc.hasse_arf);
        assert_eq!(doc.structural, vec![true, true]);
        assert_eq!(doc.galois_crosscheck, None);
        assert_eq!(
            doc.valuation_table,
            vec![
                vec![-1],
                vec![-2, -1],
                vec![-4, -2, -3],
                vec![-8, -4, -6, -11],
            ]
        );
        // one note per convention plus one per substitution
        assert_eq!(doc.notes.len(), 3);
        assert!(doc.notes[2].contains("minimal valuation -14 divisible by 2"));
        assert!(doc.notes[2].contains("f3 := f\u{0304}3 + x*f2"));
    }

    #[test]
    fn json_is_stable_and_omits_the_absent_crosscheck() {
        let doc = p2_report(false);
        let json = doc.to_json();
        assert_eq!(json, doc.to_json());
        assert!(!json.contains("galois_crosscheck"));
        assert!(json.ends_with('\n'));
        // keys arrive in sorted order
        let positions: Vec<usize> = [
            "\"equations\"",
            "\"hasse_arf\"",
            "\"lower_jumps\"",
            "\"notes\"",
            "\"structural\"",
            "\"substitutions\"",
            "\"upper_jumps\"",
            "\"valuation_table\"",
        ]
        .iter()
        .map(|k| json.find(k).unwrap_or_else(|| panic!("missing key {k}")))
        .collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]));

        let doc = p2_report(true);
        let json = doc.to_json();
        assert!(json.contains("\"galois_crosscheck\": ["));
        assert_eq!(doc.galois_crosscheck, Some(vec![1, 3, 11]));
    }

    #[test]
    fn text_layout_contains_the_table_rows() {
        let doc = p2_report(true);
        let text = doc.to_text();
        assert!(text.contains("F_3"));
        assert!(text.contains("-11"));
        assert!(text.contains("Lower jumps: 1, 3, 11"));
        assert!(text.contains("Upper jumps: 1, 2, 4"));
        assert!(text.contains("Hasse-Arf:   holds"));
        assert!(text.contains("Structural:  level 2: pass, level 3: pass"));
        assert!(text.contains("action reproduces the jumps: 1, 3, 11"));
    }

    #[test]
    fn galois_document_for_the_height_three_tower() {
        let p = prime(2);
        let vector = vec![
            TowerElement::x_power(p, 1),
            TowerElement::zero(p, 0),
            TowerElement::zero(p, 0),
        ];
        let wt = build_tower(p, &vector).unwrap();
        let doc = GaloisDocument::from_witt_tower(&wt).unwrap();
        assert_eq!(
            doc.generator_images,
            vec![
                "sigma(f1) = f1 + 1",
                "sigma(f2) = f2 + f1",
                "sigma(f3) = f3 + f1*f2 + x",
            ]
        );
        assert_eq!(doc.jumps_from_action, vec![1, 3, 11]);
        assert_eq!(doc.lower_jumps, vec![1, 3, 11]);
        assert!(doc.relations_preserved);
        let text = doc.to_text();
        assert!(text.contains("Relations preserved:   yes"));
    }

    #[test]
    fn upper_jumps_render_as_exact_fractions() {
        let p = prime(3);
        let mut t = crate::tower::TowerDescriptor::new(p);
        t.add_level(&TowerElement::x_power(p, 1)).unwrap();
        t.add_level(&parse_expression("x*f1^2", p).unwrap()).unwrap();
        let analysis = analyze_tower(&t, None).unwrap();
        let doc = ReportDocument::from_analysis(&t, &analysis).unwrap();
        assert_eq!(doc.upper_jumps, vec!["1", "7/3"]);
        assert!(!doc.hasse_arf);
        assert_eq!(doc.structural, vec![false]);
        let text = doc.to_text();
        assert!(text.contains("Hasse-Arf:   fails"));
        assert!(text.contains("Structural:  level 2: fail"));
    }
}
