use std::env;
use std::fs;
use std::path::{Path, PathBuf};

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// Parsed OEIS b-file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OeisFixture {
    pub id: String,
    pub terms: Vec<(i64, BigUint)>,
}

impl OeisFixture {
    pub fn value_at(&self, index: i64) -> Option<&BigUint> {
        self.terms
            .binary_search_by_key(&index, |(i, _)| *i)
            .ok()
            .map(|p| &self.terms[p].1)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Parses `index value` lines. Blank lines and `#` comments are skipped;
/// indices must strictly increase.
pub fn parse_bfile(text: &str) -> Result<Vec<(i64, BigUint)>> {
    let mut terms: Vec<(i64, BigUint)> = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line_no = n + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Parse { line: line_no, message };
        let mut fields = line.split_whitespace();
        let (Some(index), Some(value), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(err(format!("expected `index value`, got {line:?}")));
        };
        let index: i64 = index
            .parse()
            .map_err(|_| err(format!("bad index {index:?}")))?;
        let value: BigUint = value
            .parse()
            .map_err(|_| err(format!("bad value {value:?}")))?;
        if let Some((prev, _)) = terms.last() {
            if index <= *prev {
                return Err(err(format!("index {index} does not follow {prev}")));
            }
        }
        terms.push((index, value));
    }
    Ok(terms)
}

pub const FIXTURE_DIR_VAR: &str = "INVCOUNT_FIXTURE_DIR";

/// Directory of `bNNNNNN.txt` files.
#[derive(Clone, Debug)]
pub struct FixtureStore {
    dir: PathBuf,
}

impl FixtureStore {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        FixtureStore { dir: dir.into() }
    }

    /// `$INVCOUNT_FIXTURE_DIR` if set, otherwise the fixtures shipped with
    /// the crate.
    pub fn from_env() -> Self {
        match env::var_os(FIXTURE_DIR_VAR) {
            Some(dir) => FixtureStore::new(dir),
            None => FixtureStore::new(Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")),
        }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, id: &str) -> Result<PathBuf> {
        validate_id(id)?;
        Ok(self.dir.join(format!("b{}.txt", &id[1..])))
    }

    pub fn load(&self, id: &str) -> Result<OeisFixture> {
        let path = self.path_for(id)?;
        let text = fs::read_to_string(&path)
            .map_err(|e| Error::MissingFixture(format!("{id} at {}: {e}", path.display())))?;
        Ok(OeisFixture {
            id: id.to_string(),
            terms: parse_bfile(&text)?,
        })
    }

    /// Validates `text` and writes it as the fixture for `id`.
    pub fn save(&self, id: &str, text: &str) -> Result<OeisFixture> {
        let terms = parse_bfile(text)?;
        let path = self.path_for(id)?;
        fs::create_dir_all(&self.dir)?;
        fs::write(&path, text)?;
        Ok(OeisFixture {
            id: id.to_string(),
            terms,
        })
    }
}

/// `A` followed by six digits.
pub fn validate_id(id: &str) -> Result<()> {
    let ok = id.len() == 7 && id.starts_with('A') && id[1..].bytes().all(|b| b.is_ascii_digit());
    if ok {
        Ok(())
    } else {
        Err(Error::Domain(format!("{id:?} is not an OEIS id")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        assert_eq!(parse_bfile("0 1\n1 1\n2 2\n").unwrap().len(), 3);
        assert_eq!(parse_bfile("# comment\n5 7\n").unwrap(), [(5, BigUint::from(7u32))]);
        assert!(matches!(parse_bfile("3 1\n2 5\n"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        assert!(matches!(parse_bfile("\n\n0 x\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_bfile("0 1 2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_bfile("0\n"), Err(Error::Parse { line: 1, .. })));
        assert!(parse_bfile("").unwrap().is_empty());
        assert_eq!(parse_bfile("-1 3\n  \n0 99999999999999999999999\n").unwrap().len(), 2);
    }

    #[test]
    fn ids() {
        assert!(validate_id("A000041").is_ok());
        assert!(validate_id("A41").is_err());
        assert!(validate_id("B000041").is_err());
    }

    #[test]
    fn shipped_fixtures_load() {
        let store = FixtureStore::new(Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures"));
        for id in [
            "A000041", "A000009", "A000005", "A001227", "A005169", "A006958", "A117629", "A010054",
            "A135278", "A103451",
        ] {
            let f = store.load(id).unwrap();
            assert!(f.len() >= 30, "{id}");
        }
        assert!(matches!(store.load("A999999"), Err(Error::MissingFixture(_))));
    }

    #[test]
    fn save_round_trips() {
        let dir = env::temp_dir().join(format!("invcount-fixture-{}", std::process::id()));
        let store = FixtureStore::new(&dir);
        let f = store.save("A000001", "# test\n0 1\n1 1\n").unwrap();
        assert_eq!(store.load("A000001").unwrap(), f);
        assert!(store.save("A000002", "1 1\n0 1\n").is_err());
        fs::remove_dir_all(dir).unwrap();
    }
}
