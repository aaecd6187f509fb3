"""Exception types shared across the package."""


class TrackwallError(Exception):
    """Base class for all trackwall errors."""


class MalformedUrl(TrackwallError):
    pass


class UnknownCategory(TrackwallError):
    pass


class TooManyCategories(TrackwallError):
    pass


class AllZeroScores(TrackwallError):
    pass


class SameParty(TrackwallError):
    pass


class UnknownFormat(TrackwallError):
    pass


class FileUnreadable(TrackwallError):
    pass


class MalformedRecord(TrackwallError):
    pass
