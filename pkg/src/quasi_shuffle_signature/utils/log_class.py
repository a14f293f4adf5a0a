import sys
import warnings


class StdoutLog(object):
    """
    Class to mimic log interface that actually just
    writes to a stream (stdout unless told otherwise)

    Parameters
    ----------
    stream:
        an open text stream. If None, sys.stdout is
        looked up at write time (so that pytest's capsys
        and the CLI's redirection both see the messages)
    """
    def __init__(self, stream=None):
        self._stream = stream

    def info(self, msg, to_stdout=True):
        if not to_stdout:
            return
        stream = self._stream
        if stream is None:
            stream = sys.stdout
        print(f"===={msg}", file=stream)

    def warn(self, msg):
        warnings.warn(msg)


class QuietLog(object):
    """
    Log that just remembers what it was told.
    Used when the caller did not ask for progress output.
    """
    def __init__(self):
        self._messages = []

    @property
    def messages(self):
        return list(self._messages)

    def info(self, msg, to_stdout=True):
        self._messages.append(msg)

    def warn(self, msg):
        self._messages.append(f"WARNING: {msg}")
        warnings.warn(msg)
