//! Relation database, verification suites and reports built on `mzv-core`.

pub mod db;
pub mod report;
pub mod suites;
pub mod table1;

pub use db::{DbError, RelationDb};
pub use report::{Case, CaseVerdict, SuiteReport};
pub use suites::{Options, Runner, Suite};
