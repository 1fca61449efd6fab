# vim: fdm=indent
# author:     Fabio Zanini
# date:       16/08/17
# content:    Instance functions to plot customers and routes
# Modules
import numpy as np
import matplotlib as mpl
from matplotlib.figure import Figure
from matplotlib.patches import Patch

from .plugins import Plugin


# Classes / functions
class Plot(Plugin):
    '''Plot customers and vehicle routes'''

    @staticmethod
    def _update_properties(kwargs, defaults):
        Plot._sanitize_plot_properties(kwargs)
        Plot._sanitize_plot_properties(defaults)
        for key, val in defaults.items():
            if key not in kwargs:
                kwargs[key] = val

    @staticmethod
    def _sanitize_plot_properties(kwargs):
        aliases = {
                'linewidth': 'lw',
                'color': 'c',
                'linestyle': 'ls',
                }
        for key, alias in aliases.items():
            if alias in kwargs:
                kwargs[key] = kwargs.pop(alias)

    def customers(self, ax=None, max_size=120, **kwargs):
        '''Plot the depot and the customers, dots scaled by demand

        Args:
            ax (matplotlib.axes.Axes): The axes to plot into. If None \
                    (default), a new figure with one axes is created.
            max_size (float): marker area of the largest demand.
            **kwargs: named arguments passed to ax.scatter for customers.

        Returns:
            matplotlib.axes.Axes with the axes containing the plot.
        '''
        if ax is None:
            fig = Figure(figsize=(8, 8))
            ax = fig.add_subplot(1, 1, 1)

        defaults = {
                'color': 'grey',
                'alpha': 0.8,
                'zorder': 3,
                }
        Plot._update_properties(kwargs, defaults)

        instance = self.instance
        if instance.n_customers:
            demands = instance.demands
            sizes = 10 + max_size * demands / demands.max()
            ax.scatter(
                instance.coordinates[:, 0],
                instance.coordinates[:, 1],
                s=sizes,
                gid='customers',
                **kwargs)

        ax.scatter(
            [instance.depot[0]], [instance.depot[1]],
            s=max_size, marker='s', color='black', zorder=4, gid='depot')
        ax.set_aspect('equal')
        return ax

    def routes(
            self,
            solution,
            ax=None,
            cmap='tab20',
            legend=True,
            **kwargs):
        '''Plot the routes of a solution, one color per route

        Args:
            solution (Solution): the solution on this instance.
            ax (matplotlib.axes.Axes): The axes to plot into. If None \
                    (default), a new figure with one axes is created.
            cmap (str): colormap name for the routes.
            legend (bool or dict): If True, call ax.legend() with the cost. \
                    If a dict, pass as **kwargs to ax.legend.
            **kwargs: named arguments passed to ax.plot for the routes.

        Returns:
            matplotlib.axes.Axes with the axes containing the plot.
        '''
        ax = self.customers(ax=ax)

        defaults = {
                'linewidth': 1.5,
                'alpha': 0.9,
                }
        Plot._update_properties(kwargs, defaults)

        instance = self.instance
        nodes = instance.node_coordinates
        routes = [r for r in solution.routes if len(r)]
        colors = mpl.colormaps[cmap](np.linspace(0, 1, max(len(routes), 1)))
        for iroute, (route, color) in enumerate(zip(routes, colors), 1):
            path = [0] + [instance.check_node(c) for c in route.customers] + [0]
            ax.plot(
                nodes[path, 0], nodes[path, 1],
                color=color,
                gid='route-{:}'.format(iroute),
                **kwargs)

        if legend:
            if solution.cost is None:
                from ..solution import solution_cost
                cost = solution_cost(instance, solution)
            else:
                cost = solution.cost
            handle = Patch(
                facecolor='none', edgecolor='none',
                label='{:} routes, cost {:.2f}'.format(len(routes), cost))
            if np.isscalar(legend):
                legend = {}
            ax.legend(handles=[handle], **legend)

        ax.set_title(instance.name)
        return ax
