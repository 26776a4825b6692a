import sys

from .Logger import getLogger

logger = getLogger(__name__)

class ProfileCapability:
    ### NOTE: pypy3 does not support `sys.getsizeof()`
    def profileMemoryUsage(self):
        if 'PyPy' in sys.version:
            logger.warning("{}.profileMemoryUsage(): pypy3 is not supported".format(self.__class__.__name__))
            return {}

        res = {}
        for v in vars(self).keys():
            value = getattr(self, v)
            res[v] = sys.getsizeof(value)
            if hasattr(value, '__len__'):
                logger.warning("{}.{} = {:,d} bytes, {:,d} entries".format(self.__class__.__name__, v.ljust(24, ' '), res[v], len(value)))
            else:
                logger.warning("{}.{} = {:,d} bytes".format(self.__class__.__name__, v.ljust(24, ' '), res[v]))
        return res
