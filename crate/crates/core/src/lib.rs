pub mod exterior;
pub mod hitchin;
pub mod liealg;
pub mod linalg;
pub mod obstruction;
pub mod ring;
pub mod scalar;
pub mod systems;
pub mod torsion;
