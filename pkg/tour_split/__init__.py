"""
tour-split - optimal giant-tour Split for capacitated, pickup-and-delivery
and time-window vehicle routing variants.
"""
__version__ = "1.0.0"
