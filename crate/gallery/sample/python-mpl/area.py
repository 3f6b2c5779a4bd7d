import pandas as pd
import matplotlib.pyplot as plt

cars = pd.read_csv("data/cars.csv")
sums = cars.groupby(["year", "origin"])["weight"].sum().unstack(fill_value=0)
fig, ax = plt.subplots()
ax.stackplot(sums.index, sums.T.values, labels=sums.columns)
ax.set_xlabel("year")
ax.set_ylabel("total weight")
ax.legend(title="origin")
plt.show()
