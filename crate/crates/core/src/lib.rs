//! Exact and interval-arithmetic verification of bounds on the Laguerre
//! values `L_n(1)` and the related Padé numerators `Q_n(1)`.

pub mod exact;
pub mod interval;
pub mod asymptotics;
pub mod verify;
pub mod cli;
