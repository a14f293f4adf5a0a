"""
Define functions to "simulate" strong typing
"""
import numbers


def check_many_types(name_arr, arg_arr, type_arr):
    """
    Check that a list of arguments are of the expected type.
    Raise a ValueError if any are not.

    Parameters
    ----------
    name_arr:
        list of strings. The names of the arguments
        (for use in error message)
    arg_arr:
        list of the arguments being typed
    type_arr:
        list of the types the args in arg_arr
        are expected to be
    """
    msg = ""
    for name, arg, expected_type in zip(name_arr, arg_arr, type_arr):
        msg += check_type(
            arg_name=name,
            arg=arg,
            expected_type=expected_type
        )
    if len(msg) > 0:
        raise ValueError(msg)


def check_type(arg_name, arg, expected_type):
    """
    Parameters
    ----------
    arg_name:
        str; the name of the parameter being typed
    arg:
        the value of the parameter being typed
    expected_type:
        the type arg is expected to be

    Returns
    -------
    A str; the error message (if any) indicating why the typing
    is wrong
    """
    msg = ""
    if not isinstance(arg, expected_type):
        msg = (
            f"{arg_name} must be of type {expected_type}; "
            f"you gave {arg} of type {type(arg)}\n"
        )
    return msg


def assert_type(arg_name, arg, expected_type):
    """
    Raise a ValueError if arg is not an instance of expected_type
    """
    msg = check_type(arg_name, arg, expected_type)
    if len(msg) > 0:
        raise ValueError(msg.strip())


def check_nonnegative_int(arg_name, arg):
    """
    Raise a ValueError unless arg is an integer >= 0
    (bools are rejected even though they are ints)
    """
    if isinstance(arg, bool) or not isinstance(arg, numbers.Integral):
        raise ValueError(
            f"{arg_name} must be an integer; "
            f"you gave {arg} of type {type(arg)}"
        )
    if arg < 0:
        raise ValueError(
            f"{arg_name} must be >= 0; you gave {arg}"
        )
    return int(arg)


def check_positive_int(arg_name, arg):
    """
    Raise a ValueError unless arg is an integer >= 1
    """
    value = check_nonnegative_int(arg_name, arg)
    if value < 1:
        raise ValueError(
            f"{arg_name} must be >= 1; you gave {arg}"
        )
    return value
