//! Classical matrix algebras and the specific representations checked
//! against the tables of infinitesimally polar actions.

pub mod classical;
pub mod restricted;
pub mod tables;

pub use classical::Classical;
pub use tables::{build_rep, table_rows, verify_row, RowReport, TableRow};
