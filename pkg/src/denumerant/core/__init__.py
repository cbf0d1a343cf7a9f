""" Core implementation package.

"""
