# vim: fdm=indent
# author:     Fabio Zanini
# date:       13/02/19
# content:    Plugin template and infrastructure.


# Classes / functions
class Plugin():
    '''Plugin for sdsplit Instance'''

    def __init__(self, instance):
        '''Set the instance to self.instance

        Args:
            instance (Instance): the instance to operate on.
        '''
        self.instance = instance
