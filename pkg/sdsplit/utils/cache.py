# vim: fdm=indent
# author:     Fabio Zanini
# date:       21/08/17
# content:    Caching utils.
# Modules
from functools import wraps


# Classes / functions
def method_caches(f):
    '''Decorator for instance methods that cache results.

    Args:
        f (function): The function to decorate. It must take only keyword \
                arguments besides self. The instance must be immutable \
                with respect to the cached quantity, since the cache is \
                never invalidated.

    Returns:
        The wrapped function, including functools.wraps - so that the name \
                and docstring of the original functions should be mimicked.
    '''
    cachename = '_' + f.__name__ + '_cache'

    @wraps(f)
    def _wrapped(self, **kwargs):
        cache = self.__dict__.get(cachename)
        if (cache is not None) and (cache['func_kwargs'] == kwargs):
            return cache['cache']

        res = f(self, **kwargs)

        # Cache results
        self.__dict__[cachename] = {
            'cache': res,
            'func_kwargs': dict(kwargs)}
        return res
    return _wrapped
