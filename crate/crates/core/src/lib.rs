//! Gradings on Lie superalgebras over an exact cyclotomic field.

pub mod scalars;
pub mod abgroup;
pub mod exactla;
pub mod superalg;
pub mod gradinglab;
pub mod constructions;
pub mod cliffordlab;
pub mod groupslab;
