/// Outcome of a theorem of the alternative: exactly one of the two linear
/// systems is solvable, and the solution that was found is carried here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Alternative<L, R> {
    Left(L),
    Right(R),
}

impl<L, R> Alternative<L, R> {
    pub fn is_left(&self) -> bool {
        matches!(self, Alternative::Left(_))
    }

    pub fn is_right(&self) -> bool {
        matches!(self, Alternative::Right(_))
    }

    pub fn side(&self) -> Side {
        match self {
            Alternative::Left(_) => Side::Left,
            Alternative::Right(_) => Side::Right,
        }
    }

    pub fn left(self) -> Option<L> {
        match self {
            Alternative::Left(l) => Some(l),
            Alternative::Right(_) => None,
        }
    }

    pub fn right(self) -> Option<R> {
        match self {
            Alternative::Left(_) => None,
            Alternative::Right(r) => Some(r),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::Left => "Left",
            Side::Right => "Right",
        }
    }
}
