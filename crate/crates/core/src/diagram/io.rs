use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::presentation::{format_letter, parse_word};

use super::{Dart, DiskDiagram};

/// Serialised form: the rotation system plus labels by generator name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    pub darts: usize,
    pub opposite: Vec<Dart>,
    pub sigma: Vec<Dart>,
    pub labels: Vec<String>,
    pub outer_face_dart: Option<Dart>,
}

#[derive(Clone, Debug)]
pub struct DotOptions {
    pub shells: bool,
    /// Cutcell definition to colour, if any.
    pub cutcells: Option<u8>,
    /// Extra faces to highlight, with a caption.
    pub highlight: Vec<(usize, String)>,
}

impl Default for DotOptions {
    fn default() -> Self {
        DotOptions { shells: true, cutcells: Some(1), highlight: Vec::new() }
    }
}

impl DiskDiagram {
    pub fn to_json(&self, generators: &[String]) -> DiagramJson {
        DiagramJson {
            darts: self.num_darts(),
            opposite: self.opposites().to_vec(),
            sigma: self.sigmas().to_vec(),
            labels: self.labels().iter().map(|&l| format_letter(l, generators)).collect(),
            outer_face_dart: self.outer_cycle().first().copied(),
        }
    }

    pub fn from_json(j: &DiagramJson, generators: &[String]) -> Result<DiskDiagram> {
        if j.opposite.len() != j.darts || j.labels.len() != j.darts {
            return Err(Error::InvalidDiagram("array lengths differ from `darts`".into()));
        }
        let labels = j
            .labels
            .iter()
            .map(|s| {
                let w = parse_word(s, generators)?;
                match w.letters() {
                    [l] => Ok(*l),
                    _ => Err(Error::Parse(format!("label `{s}` is not a single letter"))),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        DiskDiagram::from_rotation(j.opposite.clone(), j.sigma.clone(), labels, j.outer_face_dart)
    }

    /// Graphviz rendering: vertices, one directed edge per positive dart and
    /// a box per inner face joined to its corners.
    pub fn to_dot(&self, generators: &[String], opts: &DotOptions) -> String {
        let shells: Vec<usize> = if opts.shells {
            self.find_shells()
                .iter()
                .filter_map(|w| match w.site {
                    super::Site::Face(f) => Some(f),
                    _ => None,
                })
                .collect()
        } else {
            Vec::new()
        };
        let cuts: Vec<usize> = match opts.cutcells {
            Some(def) => self.inner_faces().filter(|&f| self.is_cutcell(f, def)).collect(),
            None => Vec::new(),
        };
        let mut s = String::from("digraph diagram {\n  node [shape=point];\n");
        for v in 0..self.num_vertices() {
            let _ = writeln!(s, "  v{v} [xlabel=\"{v}\"];");
        }
        for d in 0..self.num_darts() as Dart {
            if self.label(d).inverse {
                continue;
            }
            let _ = writeln!(
                s,
                "  v{} -> v{} [label=\"{}\"];",
                self.origin(d),
                self.head(d),
                format_letter(self.label(d), generators)
            );
        }
        for f in self.inner_faces() {
            let word: String = self.face_cycle(f).iter().map(|&d| format_letter(self.label(d), generators)).collect();
            let mut notes = Vec::new();
            let mut color = "black";
            if cuts.contains(&f) {
                notes.push(format!("cutcell{}", opts.cutcells.unwrap_or(1)));
                color = "blue";
            }
            if shells.contains(&f) {
                notes.push("shell".to_string());
                color = "red";
            }
            for (g, caption) in &opts.highlight {
                if *g == f {
                    notes.push(caption.clone());
                    color = "darkgreen";
                }
            }
            let label = if notes.is_empty() { word } else { format!("{word}\\n{}", notes.join(",")) };
            let _ = writeln!(s, "  f{f} [shape=box, color={color}, fontcolor={color}, label=\"{label}\"];");
            let mut corners = self.face_vertices(f);
            corners.sort_unstable();
            corners.dedup();
            for v in corners {
                let _ = writeln!(s, "  f{f} -> v{v} [style=dotted, arrowhead=none, color={color}];");
            }
        }
        s.push_str("}\n");
        s
    }
}
