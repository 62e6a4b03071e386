//! Finite presentations, their text format and presentation 2-complexes.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::{CyclicWord, Letter, Word};

/// Generators plus cyclically reduced, nonempty relators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    /// Relators that are empty or not cyclically reduced are rejected.
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        for (i, g) in generators.iter().enumerate() {
            if !valid_generator_name(g) {
                return Err(Error::InvalidPresentation(format!("bad generator name `{g}`")));
            }
            if generators[..i].contains(g) {
                return Err(Error::InvalidPresentation(format!("duplicate generator `{g}`")));
            }
        }
        for (i, r) in relators.iter().enumerate() {
            if r.is_empty() {
                return Err(Error::InvalidPresentation(format!("relator {i} is empty")));
            }
            if !r.is_cyclically_reduced() {
                return Err(Error::InvalidPresentation(format!(
                    "relator {i} is not cyclically reduced"
                )));
            }
            if let Some(l) = r.letters().iter().find(|l| l.gen as usize >= generators.len()) {
                return Err(Error::InvalidPresentation(format!(
                    "relator {i} uses generator index {}",
                    l.gen
                )));
            }
        }
        Ok(Presentation { generators, relators })
    }

    /// Build from generator names and relator strings in the word text format.
    pub fn from_strs(gens: &[&str], rels: &[&str]) -> Result<Self> {
        let generators: Vec<String> = gens.iter().map(|s| s.to_string()).collect();
        let relators = rels
            .iter()
            .map(|r| parse_word(r, &generators))
            .collect::<Result<Vec<_>>>()?;
        Presentation::new(generators, relators)
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn generator_index(&self, name: &str) -> Option<u32> {
        self.generators.iter().position(|g| g == name).map(|i| i as u32)
    }

    pub fn max_relator_len(&self) -> usize {
        self.relators.iter().map(Word::len).max().unwrap_or(0)
    }

    pub fn cyclic_relators(&self) -> Vec<CyclicWord> {
        self.relators.iter().map(CyclicWord::new).collect()
    }

    pub fn parse_word(&self, text: &str) -> Result<Word> {
        parse_word(text, &self.generators)
    }

    pub fn format_word(&self, w: &Word) -> String {
        format_word(w, &self.generators)
    }

    pub fn format_letter(&self, l: Letter) -> String {
        format_letter(l, &self.generators)
    }

    /// Parse the presentation file format:
    ///
    /// ```text
    /// gens: a b c
    /// rel: ABabc
    /// rel: c
    /// ```
    ///
    /// Blank lines and `#` comments are ignored; other lines are left for
    /// the caller (model lines share the file, see `group::ModelSpec`).
    pub fn parse(text: &str) -> Result<Self> {
        let mut gens: Option<Vec<String>> = None;
        let mut rel_lines = Vec::new();
        for line in text.lines() {
            let line = line.split('#').next().unwrap_or("").trim();
            if let Some(rest) = line.strip_prefix("gens:") {
                gens = Some(rest.split_whitespace().map(str::to_string).collect());
            } else if let Some(rest) = line.strip_prefix("rel:") {
                rel_lines.push(rest.trim().to_string());
            }
        }
        let gens = gens.ok_or_else(|| Error::Parse("missing `gens:` line".into()))?;
        let relators = rel_lines
            .iter()
            .map(|r| parse_word(r, &gens))
            .collect::<Result<Vec<_>>>()?;
        Presentation::new(gens, relators)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("gens: {}\n", self.generators.join(" "));
        for r in &self.relators {
            let _ = writeln!(s, "rel: {}", self.format_word(r));
        }
        s
    }
}

fn valid_generator_name(g: &str) -> bool {
    let mut chars = g.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_lowercase())
        && chars.all(|c| c.is_ascii_digit() || c == '_')
}

/// Parse a word. Generator names are a lowercase letter followed by digits;
/// an upper-case initial or a `^-1` suffix marks an inverse, so `aBBa` and
/// `a b^-1 b^-1 a` denote the same word. `1` alone is the empty word.
pub fn parse_word(text: &str, generators: &[String]) -> Result<Word> {
    let t = text.trim();
    if t == "1" || t.is_empty() {
        return Ok(Word::empty());
    }
    let chars: Vec<char> = t.chars().collect();
    let mut i = 0;
    let mut out = Vec::new();
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() || c == '*' || c == '.' {
            i += 1;
            continue;
        }
        if !c.is_ascii_alphabetic() {
            return Err(Error::Parse(format!("unexpected `{c}` in `{t}`")));
        }
        let mut name = String::new();
        name.push(c.to_ascii_lowercase());
        let upper = c.is_ascii_uppercase();
        i += 1;
        while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '_') {
            name.push(chars[i]);
            i += 1;
        }
        let mut power: i64 = 1;
        if i < chars.len() && chars[i] == '^' {
            i += 1;
            let start = i;
            if i < chars.len() && chars[i] == '-' {
                i += 1;
            }
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let exp: String = chars[start..i].iter().collect();
            power = exp
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent `{exp}` in `{t}`")))?;
        }
        let gen = generators
            .iter()
            .position(|g| *g == name)
            .ok_or_else(|| Error::UnknownGenerator(name.clone()))? as u32;
        let inverse = upper ^ (power < 0);
        for _ in 0..power.unsigned_abs() {
            out.push(Letter::new(gen, inverse));
        }
    }
    Ok(Word(out))
}

pub fn format_letter(l: Letter, generators: &[String]) -> String {
    let name = generators
        .get(l.gen as usize)
        .cloned()
        .unwrap_or_else(|| format!("g{}", l.gen));
    if l.inverse {
        let mut cs = name.chars();
        match cs.next() {
            Some(c) => c.to_ascii_uppercase().to_string() + cs.as_str(),
            None => name,
        }
    } else {
        name
    }
}

/// Compact text form using upper case for inverses (parseable by [`parse_word`]).
pub fn format_word(w: &Word, generators: &[String]) -> String {
    if w.is_empty() {
        return "1".to_string();
    }
    w.letters().iter().map(|&l| format_letter(l, generators)).collect()
}

/// A directed edge of a 2-complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexEdge {
    pub tail: usize,
    pub head: usize,
    pub generator: u32,
}

/// Oriented edge used in a boundary circuit: edge index plus direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeStep {
    pub edge: usize,
    pub forward: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoComplex {
    pub vertices: usize,
    pub edges: Vec<ComplexEdge>,
    pub faces: Vec<Vec<EdgeStep>>,
}

impl TwoComplex {
    fn endpoints(&self, s: EdgeStep) -> (usize, usize) {
        let e = &self.edges[s.edge];
        if s.forward {
            (e.tail, e.head)
        } else {
            (e.head, e.tail)
        }
    }

    /// Every face boundary is a closed edge path.
    pub fn circuits_closed(&self) -> bool {
        self.faces.iter().all(|f| {
            !f.is_empty()
                && f.iter().enumerate().all(|(i, &s)| {
                    let next = f[(i + 1) % f.len()];
                    self.endpoints(s).1 == self.endpoints(next).0
                })
        })
    }

    pub fn face_perimeters(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    /// Word read along a face boundary (generator labels with direction).
    pub fn face_word(&self, f: usize) -> Word {
        self.faces[f]
            .iter()
            .map(|s| Letter::new(self.edges[s.edge].generator, !s.forward))
            .collect()
    }
}

/// One vertex, one loop per generator, one face per relator.
pub fn presentation_complex(p: &Presentation) -> TwoComplex {
    let edges = (0..p.generators().len())
        .map(|g| ComplexEdge { tail: 0, head: 0, generator: g as u32 })
        .collect();
    let faces = p
        .relators()
        .iter()
        .map(|r| {
            r.letters()
                .iter()
                .map(|l| EdgeStep { edge: l.gen as usize, forward: !l.inverse })
                .collect()
        })
        .collect();
    TwoComplex { vertices: 1, edges, faces }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn upper_case_and_caret_agree() {
        let gens = vec!["a".to_string(), "b".to_string()];
        let w1 = parse_word("aBBa", &gens).unwrap();
        let w2 = parse_word("a b^-1 b^-1 a", &gens).unwrap();
        assert_eq!(w1, w2);
        assert_eq!(format_word(&w1, &gens), "aBBa");
    }

    #[test]
    fn multi_character_names() {
        let gens: Vec<String> = ["a1", "a2", "b1"].iter().map(|s| s.to_string()).collect();
        let w = parse_word("a2B1a1^-1", &gens).unwrap();
        assert_eq!(w.0, vec![Letter::pos(1), Letter::neg(2), Letter::neg(0)]);
        assert_eq!(format_word(&w, &gens), "a2B1A1");
        assert!(matches!(parse_word("z", &gens), Err(Error::UnknownGenerator(_))));
        let sq = parse_word("a1^2", &gens).unwrap();
        assert_eq!(sq.len(), 2);
    }

    #[test]
    fn rejects_unreduced_relators() {
        assert!(Presentation::from_strs(&["a", "b"], &["abB"]).is_err());
        assert!(Presentation::from_strs(&["a", "b"], &["abA"]).is_err());
        assert!(Presentation::from_strs(&["a"], &["1"]).is_err());
        assert!(Presentation::from_strs(&["a", "a"], &[]).is_err());
    }

    #[test]
    fn complex_of_commutator_presentation() {
        let p = Presentation::from_strs(&["a", "b", "c"], &["ABabc", "c"]).unwrap();
        let x = presentation_complex(&p);
        assert_eq!(x.vertices, 1);
        assert_eq!(x.edges.len(), 3);
        assert_eq!(x.face_perimeters(), vec![5, 1]);
        assert!(x.circuits_closed());
        assert_eq!(x.face_word(0), p.relators()[0]);
    }

    #[test]
    fn complex_without_relators() {
        let p = Presentation::from_strs(&["a", "b", "c", "d"], &[]).unwrap();
        let x = presentation_complex(&p);
        assert_eq!((x.vertices, x.edges.len(), x.faces.len()), (1, 4, 0));
    }

    #[test]
    fn file_round_trip() {
        let text = "# torus\ngens: a b\nrel: abAB\n";
        let p = Presentation::parse(text).unwrap();
        assert_eq!(Presentation::parse(&p.to_text()).unwrap(), p);
    }
}
