pub mod canonical;
pub mod completion;
pub mod flaggeo;
pub mod hecke;
pub mod io;
pub mod iqg;
pub mod laurent;
pub mod qtensor;
pub mod report;
pub mod weyl;
