pub mod algebra;
pub mod bialgebroid;
pub mod bimodule;
pub mod category;
pub mod centralizer;
pub mod field;
pub mod fixtures;
pub mod format;
pub mod hopf;
pub mod linalg;
pub mod mat;
pub mod module;
pub mod pipelines;
pub mod prop1;
pub mod report;
pub mod workbench;
