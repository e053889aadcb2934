//! Pattern-class catalog, path runner, OEIS fixture checks and the full
//! verification suite.

mod bfile;
mod catalog;
mod oeis;
mod run;
mod verify;

pub use bfile::{parse_bfile, validate_id, FixtureStore, OeisFixture, FIXTURE_DIR_VAR};
pub use catalog::{catalog, entry, exact_entry, CatalogEntry, FastPath, GfPath, OffsetPolicy, Symmetry};
pub use oeis::{entry_for_id, oeis_check, oeis_check_offline, OeisCheck};
pub use run::{compare, run_count, RunOutput, Runner, Terms, PIN_K};
pub use verify::{verify_all, Check, CheckStatus, VerifyReport};
