pub(crate) mod embed;
pub mod drawing;
pub mod instance;
pub mod lists;
pub mod plane;
pub mod validity;
pub mod oracle;
pub mod format;
pub mod solver;
pub mod harness;
