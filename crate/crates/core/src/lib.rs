pub mod adapted;
pub mod bn;
pub mod cli;
pub mod courant;
pub mod instance;
pub mod quadratic;
pub mod report;
pub mod symbolic;
