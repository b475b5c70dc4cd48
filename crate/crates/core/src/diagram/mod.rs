//! Fronts, tangles and the diagrams derived from them.

pub mod framed;
pub mod front;
pub mod graph;
pub mod lagrangian;
pub mod satellite;
pub mod tangle;

pub use framed::{framed_from_front, framed_from_tangle, Cross, FEvent, FramedDiagram};
pub use front::{parse_events, Event, FrontDiagram};
pub use graph::{Dir, Shape, StrandGraph, Walk};
pub use lagrangian::{ng_resolution, ChordKind, LagrangianDiagram, PlanarMap, ReebChord};
pub use satellite::{
    insertion_point, satellite, satellite_with_base_points, CleanSlice, Satellite, SatelliteMarkup,
};
pub use tangle::{LegendrianTangle, PermutationBraid, TEvent};
