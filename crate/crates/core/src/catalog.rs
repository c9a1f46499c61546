//! Named link diagrams.
//!
//! The built-in table is compiled in from `data/catalog.txt`; setting `SKEINLAB_CATALOG` to a
//! file path replaces it at runtime. One `name: PD[...] loops=n` entry per line, `#` starts a
//! comment.

use std::path::Path;

use thiserror::Error;

use crate::diagram::{DiagramError, LinkDiagram};

const BUILTIN: &str = include_str!("../data/catalog.txt");

pub const ENV_VAR: &str = "SKEINLAB_CATALOG";

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("line {line}: {source}")]
    Entry { line: usize, source: DiagramError },
    #[error(transparent)]
    Literal(DiagramError),
    #[error("line {0}: expected 'name: PD[...]'")]
    Syntax(usize),
    #[error("duplicate catalog name '{0}'")]
    Duplicate(String),
    #[error("unknown link '{0}'")]
    Unknown(String),
    #[error("cannot read catalog: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Clone, Debug)]
pub struct Catalog {
    entries: Vec<(String, String, LinkDiagram)>,
}

impl Catalog {
    pub fn parse(text: &str) -> Result<Catalog, CatalogError> {
        let mut entries: Vec<(String, String, LinkDiagram)> = vec![];
        for (i, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (name, pd) = line.split_once(':').ok_or(CatalogError::Syntax(i + 1))?;
            let (name, pd) = (name.trim(), pd.trim());
            if name.is_empty() {
                return Err(CatalogError::Syntax(i + 1));
            }
            if entries.iter().any(|e| e.0 == name) {
                return Err(CatalogError::Duplicate(name.to_string()));
            }
            let d = pd.parse().map_err(|source| CatalogError::Entry { line: i + 1, source })?;
            entries.push((name.to_string(), pd.to_string(), d));
        }
        Ok(Catalog { entries })
    }

    /// The compiled-in table.
    pub fn builtin() -> Catalog {
        Catalog::parse(BUILTIN).expect("built-in catalog is well formed")
    }

    pub fn from_file(path: &Path) -> Result<Catalog, CatalogError> {
        Catalog::parse(&std::fs::read_to_string(path)?)
    }

    /// `$SKEINLAB_CATALOG` if set, the built-in table otherwise.
    pub fn load() -> Result<Catalog, CatalogError> {
        match std::env::var_os(ENV_VAR) {
            Some(p) if !p.is_empty() => Catalog::from_file(Path::new(&p)),
            _ => Ok(Catalog::builtin()),
        }
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|e| e.0.as_str())
    }

    pub fn get(&self, name: &str) -> Option<&LinkDiagram> {
        self.entries.iter().find(|e| e.0 == name).map(|e| &e.2)
    }

    /// The PD text as written in the table.
    pub fn source(&self, name: &str) -> Option<&str> {
        self.entries.iter().find(|e| e.0 == name).map(|e| e.1.as_str())
    }

    pub fn entries(&self) -> impl Iterator<Item = (&str, &LinkDiagram)> {
        self.entries.iter().map(|e| (e.0.as_str(), &e.2))
    }

    /// A catalog name, or failing that a PD / JSON diagram literal.
    pub fn resolve(&self, spec: &str) -> Result<LinkDiagram, CatalogError> {
        if let Some(d) = self.get(spec.trim()) {
            return Ok(d.clone());
        }
        let s = spec.trim_start();
        if s.starts_with("PD") || s.starts_with('{') {
            return spec.parse().map_err(CatalogError::Literal);
        }
        Err(CatalogError::Unknown(spec.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_parses() {
        let c = Catalog::builtin();
        for n in ["unknot", "hopf+", "hopf-", "trefoil-", "trefoil+", "figure8", "whitehead", "unlink2"] {
            assert!(c.get(n).is_some(), "{n}");
        }
        assert_eq!(c.get("unlink3").unwrap().component_count(), 3);
        assert_eq!(c.get("curl--").unwrap().writhe(), -2);
        assert_eq!(c.get("whitehead").unwrap().linking_number(0, 1).unwrap(), 0);
    }

    #[test]
    fn resolve_literals() {
        let c = Catalog::builtin();
        assert_eq!(c.resolve("PD[X(1,1,2,2)]").unwrap().writhe(), 1);
        assert_eq!(c.resolve(r#"{"crossings": [], "loops": 2}"#).unwrap().component_count(), 2);
        assert!(matches!(c.resolve("nonesuch"), Err(CatalogError::Unknown(_))));
    }

    #[test]
    fn rejects_bad_lines() {
        assert!(matches!(Catalog::parse("oops"), Err(CatalogError::Syntax(1))));
        assert!(matches!(Catalog::parse("a: PD[] loops=1\na: PD[] loops=2"), Err(CatalogError::Duplicate(_))));
        assert!(matches!(Catalog::parse("\nx: PD[X(1,2,3)]"), Err(CatalogError::Entry { line: 2, .. })));
    }
}
